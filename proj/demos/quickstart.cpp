// Minimal library walkthrough: build a field, deploy a network, run a few
// hundred rounds of the hemisphere-zoning protocol, and print what happened.

#include <iostream>

#include "hzsim/hzsim.hpp"

int main() {
    using namespace hzsim;

    SimConfig cfg;               // 100 nodes on a 100 m field, BS at the center
    cfg.hard_threshold = 100.0;  // report half of all readings
    cfg.max_rounds = 300;
    cfg.seed = 42;

    const Zoning z = build_zoning(cfg.field_size, cfg.eta);
    std::cout << "corona width " << z.beta << " m, outer radius " << z.outer_radius()
              << " m\n";

    RngStream deploy_stream = RngStream::derive(cfg.seed, StreamKind::Deploy);
    std::vector<Node> nodes = deploy(cfg, z, deploy_stream);
    std::cout << "deployed " << nodes.size() << " nodes; node 0 sits in "
              << to_string(nodes[0].region) << " at (" << nodes[0].pos.x << ", "
              << nodes[0].pos.y << ")\n";

    const RunResult result = run_simulation(cfg, "mbehzad");
    const SummaryStats& s = result.summary;
    std::cout << "after " << result.series.size() << " rounds: " << result.series.back().alive
              << " alive, " << s.total_sent << " packets sent, " << s.total_received
              << " received at the BS, " << s.total_dropped << " dropped\n"
              << "energy consumed: " << s.total_energy << " J of " << result.initial_energy
              << " J\n";
    return 0;
}

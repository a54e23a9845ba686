#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hzsim/channel.hpp"
#include "hzsim/network.hpp"
#include "hzsim/radio.hpp"
#include "hzsim/rng.hpp"
#include "hzsim/zoning.hpp"

namespace hzsim {

// Cluster-head assignment for one round. M1 never has a CH; a region
// with no alive nodes has no entry.
struct ChAssignment {
    std::array<std::optional<int>, kRegionCount> by_region;

    std::optional<int> get(RegionId r) const { return by_region[region_index(r)]; }
    void set(RegionId r, int node_id) { by_region[region_index(r)] = node_id; }

    int count() const {
        int n = 0;
        for (const auto& e : by_region) n += e.has_value() ? 1 : 0;
        return n;
    }
};

inline const Node* find_node(std::span<const Node> nodes, int id) {
    for (const Node& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

// Middle-corona CHs minimize distance to the region midpoint; outer-corona
// CHs additionally stay on the same side of the quadrant bisector as their
// paired middle CH when an alive candidate exists on that side. Ties break
// to the lowest node id.
inline ChAssignment elect_cluster_heads(std::span<const Node> nodes, const Zoning& z) {
    ChAssignment chs;

    auto argmin_to = [&](RegionId region, Point target,
                         const std::function<bool(const Node&)>& admit) -> const Node* {
        const Node* best = nullptr;
        double best_d = std::numeric_limits<double>::infinity();
        for (const Node& n : nodes) {
            if (!n.alive || n.region != region) continue;
            if (admit && !admit(n)) continue;
            const double d = distance(n.pos, target);
            if (d < best_d || (d == best_d && best && n.id < best->id)) {
                best = &n;
                best_d = d;
            }
        }
        return best;
    };

    for (int q = 0; q < 4; ++q) {
        const RegionId middle = make_region(2, q);
        const RegionId outer = make_region(3, q);
        if (!z.has_region(middle)) continue;

        const Node* mid_ch = argmin_to(middle, region_midpoint(z, middle), nullptr);
        if (mid_ch) chs.set(middle, mid_ch->id);

        if (!z.has_region(outer)) continue;
        const Point outer_target = region_midpoint(z, outer);
        const Node* outer_ch = nullptr;
        if (mid_ch) {
            const QuadrantSide side = quadrant_side(z, mid_ch->pos);
            outer_ch = argmin_to(outer, outer_target, [&](const Node& n) {
                return quadrant_side(z, n.pos) == side;
            });
        }
        if (!outer_ch) outer_ch = argmin_to(outer, outer_target, nullptr);
        if (outer_ch) chs.set(outer, outer_ch->id);
    }
    return chs;
}

// Relay choice for an outer-corona CH. nullopt means transmit straight to
// the base station. AdjacentMin picks the nearest CH among the radially
// aligned middle region and its two angular neighbours; Fixed always maps
// to the aligned region. Either way a missing choice falls back to the
// nearest existing middle CH, then to the BS.
inline std::optional<int> next_hop(RegionId outer_region, const ChAssignment& chs,
                                   std::span<const Node> nodes, NextHopMode mode) {
    const int q = quadrant_of(outer_region);
    const auto outer_ch = chs.get(outer_region);
    if (!outer_ch) return std::nullopt;
    const Node* from_node = find_node(nodes, *outer_ch);
    if (!from_node) return std::nullopt;
    const Point from = from_node->pos;

    auto nearest_of = [&](std::span<const RegionId> regions) -> std::optional<int> {
        std::optional<int> best;
        double best_d = std::numeric_limits<double>::infinity();
        for (RegionId r : regions) {
            const auto ch = chs.get(r);
            if (!ch) continue;
            const Node* cand = find_node(nodes, *ch);
            if (!cand) continue;
            const double d = distance(from, cand->pos);
            if (d < best_d) {
                best = *ch;
                best_d = d;
            }
        }
        return best;
    };

    std::optional<int> hop;
    if (mode == NextHopMode::Fixed) {
        hop = chs.get(make_region(2, q));
    } else {
        const std::array<RegionId, 3> cands = {make_region(2, q), make_region(2, (q + 1) & 3),
                                               make_region(2, (q + 3) & 3)};
        hop = nearest_of(cands);
    }
    if (!hop) {
        const std::array<RegionId, 4> all_middle = {RegionId::M2, RegionId::M3, RegionId::M4,
                                                    RegionId::M5};
        hop = nearest_of(all_middle);
    }
    return hop;
}

// One sensed attribute reading.
inline double sense(const SimConfig& cfg, RngStream& rng) {
    return rng.uniform(cfg.attr_min, cfg.attr_max);
}

// Reactive transmission gate. The hard threshold must always be crossed;
// after the first report the soft threshold additionally gates: in Delta
// mode the value must have moved by at least ST since the last report, in
// Literal mode it must itself be >= ST.
inline bool should_transmit(const Node& node, double value, const SimConfig& cfg) {
    if (value < cfg.hard_threshold) return false;
    if (!node.has_sent_before) return true;
    if (cfg.soft_mode == SoftMode::Delta)
        return std::abs(value - node.last_sent_value) >= cfg.soft_threshold;
    return value >= cfg.soft_threshold;
}

inline void record_transmission(Node& node, double value) {
    node.has_sent_before = true;
    node.last_sent_value = value;
}

struct RoundOutcome {
    long long packets_sent = 0;      // transmission attempts, counted per hop
    long long packets_delivered = 0; // attempts that survived the channel
    long long packets_dropped = 0;   // attempts the channel dropped
    long long packets_received_bs = 0;
    double energy_consumed = 0.0;
    std::vector<double> delays; // one entry per packet delivered at the BS
    std::vector<int> newly_dead;
};

// One hop attempt, for test-mode route audits.
struct HopRecord {
    int from_id = -1;
    RegionId from_region = RegionId::M1;
    Role from_role = Role::Member;
    std::optional<int> to_id; // nullopt = base station
    double dist = 0.0;
    bool delivered = false;
};

// Uniform per-protocol round engine: setup_round() re-elects or rebuilds
// topology, run_round() moves one round of traffic and returns the
// round's flow and energy outcome.
class RoundEngine {
public:
    RoundEngine(const SimConfig& cfg, Zoning zoning, std::vector<Node> nodes, std::uint64_t seed)
        : cfg_(cfg),
          zoning_(zoning),
          nodes_(std::move(nodes)),
          channel_stream_(RngStream::derive(seed, StreamKind::Channel)) {
        // Engines address nodes and per-node sensor streams by id, so ids
        // must be dense and in storage order, as deploy() produces them.
        node_streams_.reserve(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].id != static_cast<int>(i))
                throw ConfigError("engine requires nodes with dense ids in order");
            node_streams_.push_back(RngStream::derive(seed, StreamKind::Node, nodes_[i].id));
        }
    }

    virtual ~RoundEngine() = default;

    virtual void setup_round(long long round) { (void)round; }
    virtual RoundOutcome run_round(long long round) = 0;

    const std::vector<Node>& nodes() const { return nodes_; }
    std::vector<Node>& nodes() { return nodes_; }
    const Zoning& zoning() const { return zoning_; }
    const SimConfig& config() const { return cfg_; }

    virtual const ChAssignment* cluster_heads() const { return nullptr; }

    int alive_count() const {
        int n = 0;
        for (const Node& node : nodes_) n += node.alive ? 1 : 0;
        return n;
    }

    double total_residual() const {
        double e = 0.0;
        for (const Node& node : nodes_) e += node.residual_energy;
        return e;
    }

    // Test hook: when set, every hop attempt is appended.
    void set_hop_trace(std::vector<HopRecord>* trace) { trace_ = trace; }

protected:
    // Debits energy from a node, capping at its residual. A node whose
    // residual reaches zero dies immediately but completes this debit.
    void debit(Node& node, double amount, RoundOutcome& out) {
        if (!node.alive || amount <= 0.0) return;
        const double spend = std::min(amount, node.residual_energy);
        node.residual_energy -= spend;
        out.energy_consumed += spend;
        if (node.residual_energy <= 0.0) {
            node.residual_energy = 0.0;
            node.alive = false;
            out.newly_dead.push_back(node.id);
        }
    }

    // One transmission attempt from a node to another node or to the BS
    // (to = nullptr). Transmitter and receiver are debited whether or not
    // the channel drops the packet. Returns true when the packet arrived
    // at a receiver able to process it.
    bool hop(Node& from, Node* to, double dist, bool use_channel, RoundOutcome& out) {
        debit(from, tx_energy(cfg_.radio, cfg_.packet_bits, dist), out);
        if (to) debit(*to, rx_energy(cfg_.radio, cfg_.packet_bits), out);
        out.packets_sent += 1;
        const bool delivered =
            !use_channel || attempt_delivery(cfg_.channel, channel_stream_) == Delivery::Delivered;
        if (delivered)
            out.packets_delivered += 1;
        else
            out.packets_dropped += 1;
        if (trace_)
            trace_->push_back({from.id, from.region, from.role,
                               to ? std::optional<int>(to->id) : std::nullopt, dist, delivered});
        return delivered && (!to || to->alive);
    }

    double bs_distance(const Node& n) const { return distance(n.pos, zoning_.center); }

    // Per-CH accumulation of one round's traffic. path_dist carries the
    // longest hop-distance sum among merged packets, so a packet delivered
    // at the BS reports the full path's propagation delay.
    struct PacketBuffer {
        int member_count = 0; // tier-1 packets received
        int relayed_count = 0; // tier-2 packets received
        bool own_reading = false;
        double path_dist = 0.0;
    };

    void deliver_at_bs(double path_dist, RoundOutcome& out) {
        out.packets_received_bs += 1;
        out.delays.push_back(propagation_delay(cfg_.channel, {path_dist}));
    }

    SimConfig cfg_;
    Zoning zoning_;
    std::vector<Node> nodes_;
    std::vector<RngStream> node_streams_;
    RngStream channel_stream_;
    std::vector<HopRecord>* trace_ = nullptr;
};

// Hemisphere-zoning protocol: per-round minimum-distance CH election with
// paired-region side synchronization, then three communication tiers.
class HzEngine : public RoundEngine {
public:
    using RoundEngine::RoundEngine;

    void setup_round(long long) override {
        chs_ = elect_cluster_heads(nodes_, zoning_);
        for (Node& n : nodes_) n.role = Role::Member;
        for (int i = 0; i < kRegionCount; ++i)
            if (chs_.by_region[i]) nodes_[*chs_.by_region[i]].role = Role::ClusterHead;
    }

    const ChAssignment* cluster_heads() const override { return &chs_; }

    RoundOutcome run_round(long long) override {
        RoundOutcome out;
        std::vector<PacketBuffer> buf(nodes_.size());

        // Tier 1: members of the sliced coronas report to their region CH.
        // CHs sense as well; their own reading needs no hop.
        for (Node& n : nodes_) {
            if (!n.alive || n.region == RegionId::M1) continue;
            const double value = sense(cfg_, node_streams_[n.id]);
            if (!should_transmit(n, value, cfg_)) continue;
            record_transmission(n, value);
            if (n.role == Role::ClusterHead) {
                buf[n.id].own_reading = true;
                continue;
            }
            const auto ch = chs_.get(n.region);
            if (!ch) continue; // region lost its CH candidates mid-run
            Node& head = nodes_[*ch];
            const double d = distance(n.pos, head.pos);
            if (hop(n, &head, d, cfg_.tier1_drops, out)) {
                buf[head.id].member_count += 1;
                buf[head.id].path_dist = std::max(buf[head.id].path_dist, d);
            }
        }

        // Aggregation at every CH that heard members this round.
        for (int i = 0; i < kRegionCount; ++i) {
            if (!chs_.by_region[i]) continue;
            Node& head = nodes_[*chs_.by_region[i]];
            if (head.alive && buf[head.id].member_count > 0)
                debit(head, aggregation_energy(cfg_.radio, cfg_.packet_bits, buf[head.id].member_count),
                      out);
        }

        // Tier 2: outer CHs relay their aggregate inward.
        for (int q = 0; q < 4; ++q) {
            const RegionId outer = make_region(3, q);
            if (!zoning_.has_region(outer)) continue;
            const auto ch = chs_.get(outer);
            if (!ch) continue;
            Node& head = nodes_[*ch];
            if (!head.alive || !has_aggregate(buf[head.id])) continue;
            const auto relay = next_hop(outer, chs_, nodes_, cfg_.next_hop_mode);
            if (relay) {
                Node& mid = nodes_[*relay];
                const double d = distance(head.pos, mid.pos);
                if (hop(head, &mid, d, true, out)) {
                    buf[mid.id].relayed_count += 1;
                    buf[mid.id].path_dist =
                        std::max(buf[mid.id].path_dist, buf[head.id].path_dist + d);
                }
            } else {
                const double d = bs_distance(head);
                if (hop(head, nullptr, d, true, out))
                    deliver_at_bs(buf[head.id].path_dist + d, out);
            }
        }

        // Second aggregation at middle CHs that received relays.
        for (int q = 0; q < 4; ++q) {
            const RegionId middle = make_region(2, q);
            if (!zoning_.has_region(middle)) continue;
            const auto ch = chs_.get(middle);
            if (!ch) continue;
            Node& head = nodes_[*ch];
            if (head.alive && buf[head.id].relayed_count > 0)
                debit(head,
                      aggregation_energy(cfg_.radio, cfg_.packet_bits, buf[head.id].relayed_count),
                      out);
        }

        // Tier 3: inner-corona nodes and middle CHs talk to the BS.
        for (Node& n : nodes_) {
            if (!n.alive || n.region != RegionId::M1) continue;
            const double value = sense(cfg_, node_streams_[n.id]);
            if (!should_transmit(n, value, cfg_)) continue;
            record_transmission(n, value);
            const double d = bs_distance(n);
            if (hop(n, nullptr, d, true, out)) deliver_at_bs(d, out);
        }
        for (int q = 0; q < 4; ++q) {
            const RegionId middle = make_region(2, q);
            if (!zoning_.has_region(middle)) continue;
            const auto ch = chs_.get(middle);
            if (!ch) continue;
            Node& head = nodes_[*ch];
            const PacketBuffer& b = buf[head.id];
            if (!head.alive || !(has_aggregate(b) || b.relayed_count > 0)) continue;
            const double d = bs_distance(head);
            if (hop(head, nullptr, d, true, out)) deliver_at_bs(b.path_dist + d, out);
        }
        return out;
    }

private:
    static bool has_aggregate(const PacketBuffer& b) {
        return b.member_count > 0 || b.own_reading;
    }

    ChAssignment chs_;
};

// LEACH-style baseline: probabilistic self-election with the classic
// rotation threshold, nearest-CH membership, single-hop CH-to-BS uplink.
// Threshold gating for members is optional (cfg.leach_gated).
class LeachEngine : public RoundEngine {
public:
    LeachEngine(const SimConfig& cfg, Zoning zoning, std::vector<Node> nodes, std::uint64_t seed)
        : RoundEngine(cfg, zoning, std::move(nodes), seed),
          last_ch_round_(nodes_.size(), kNeverCh) {}

    void setup_round(long long round) override {
        const long long r0 = round - 1; // election formula counts rounds from zero
        // floor(1/p) with a guard against 1/p landing just below an integer.
        const long long epoch =
            std::max<long long>(1, static_cast<long long>(std::floor(1.0 / cfg_.p_ch + 1e-9)));
        const double denom = 1.0 - cfg_.p_ch * static_cast<double>(r0 % epoch);
        const double threshold = denom <= 0.0 ? 1.0 : std::min(1.0, cfg_.p_ch / denom);

        chs_.clear();
        for (Node& n : nodes_) n.role = Role::Member;
        for (Node& n : nodes_) {
            if (!n.alive) continue;
            const bool eligible =
                last_ch_round_[n.id] == kNeverCh || r0 - last_ch_round_[n.id] >= epoch;
            if (!eligible) continue;
            if (node_streams_[n.id].uniform01() < threshold) {
                chs_.push_back(n.id);
                n.role = Role::ClusterHead;
                last_ch_round_[n.id] = r0;
            }
        }
    }

    const std::vector<int>& current_chs() const { return chs_; }

    RoundOutcome run_round(long long) override {
        RoundOutcome out;
        std::vector<PacketBuffer> buf(nodes_.size());

        for (Node& n : nodes_) {
            if (!n.alive) continue;
            const double value = sense(cfg_, node_streams_[n.id]);
            if (cfg_.leach_gated) {
                if (!should_transmit(n, value, cfg_)) continue;
                record_transmission(n, value);
            }
            if (n.role == Role::ClusterHead) {
                buf[n.id].own_reading = true;
                continue;
            }
            Node* head = nearest_ch(n);
            if (!head) {
                // No CH self-elected this round: report straight to the BS.
                const double d = bs_distance(n);
                if (hop(n, nullptr, d, true, out)) deliver_at_bs(d, out);
                continue;
            }
            const double d = distance(n.pos, head->pos);
            if (hop(n, head, d, cfg_.tier1_drops, out)) {
                buf[head->id].member_count += 1;
                buf[head->id].path_dist = std::max(buf[head->id].path_dist, d);
            }
        }

        for (int id : chs_) {
            Node& head = nodes_[id];
            if (head.alive && buf[id].member_count > 0)
                debit(head, aggregation_energy(cfg_.radio, cfg_.packet_bits, buf[id].member_count),
                      out);
            if (!head.alive || !(buf[id].member_count > 0 || buf[id].own_reading)) continue;
            const double d = bs_distance(head);
            if (hop(head, nullptr, d, true, out)) deliver_at_bs(buf[id].path_dist + d, out);
        }
        return out;
    }

private:
    static constexpr long long kNeverCh = std::numeric_limits<long long>::min();

    Node* nearest_ch(const Node& n) {
        Node* best = nullptr;
        double best_d = std::numeric_limits<double>::infinity();
        for (int id : chs_) {
            Node& c = nodes_[id];
            const double d = distance(n.pos, c.pos);
            if (d < best_d) {
                best = &c;
                best_d = d;
            }
        }
        return best;
    }

    std::vector<int> chs_;
    std::vector<long long> last_ch_round_;
};

// Direct-transmission baseline: every node that passes the threshold gate
// reports straight to the BS.
class DirectEngine : public RoundEngine {
public:
    using RoundEngine::RoundEngine;

    RoundOutcome run_round(long long) override {
        RoundOutcome out;
        for (Node& n : nodes_) {
            if (!n.alive) continue;
            const double value = sense(cfg_, node_streams_[n.id]);
            if (!should_transmit(n, value, cfg_)) continue;
            record_transmission(n, value);
            const double d = bs_distance(n);
            if (hop(n, nullptr, d, true, out)) deliver_at_bs(d, out);
        }
        return out;
    }
};

using EngineFactory = std::function<std::unique_ptr<RoundEngine>(
    const SimConfig&, const Zoning&, std::vector<Node>, std::uint64_t)>;

inline std::map<std::string, EngineFactory, std::less<>>& protocol_registry() {
    static std::map<std::string, EngineFactory, std::less<>> registry = {
        {"mbehzad",
         [](const SimConfig& c, const Zoning& z, std::vector<Node> n, std::uint64_t s) {
             return std::unique_ptr<RoundEngine>(new HzEngine(c, z, std::move(n), s));
         }},
        {"leach",
         [](const SimConfig& c, const Zoning& z, std::vector<Node> n, std::uint64_t s) {
             return std::unique_ptr<RoundEngine>(new LeachEngine(c, z, std::move(n), s));
         }},
        {"direct",
         [](const SimConfig& c, const Zoning& z, std::vector<Node> n, std::uint64_t s) {
             return std::unique_ptr<RoundEngine>(new DirectEngine(c, z, std::move(n), s));
         }},
    };
    return registry;
}

inline void register_protocol(const std::string& name, EngineFactory factory) {
    protocol_registry()[name] = std::move(factory);
}

inline std::vector<std::string> protocol_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : protocol_registry()) names.push_back(name);
    return names;
}

inline std::unique_ptr<RoundEngine> make_engine(std::string_view protocol, const SimConfig& cfg,
                                                const Zoning& z, std::vector<Node> nodes,
                                                std::uint64_t seed) {
    const auto it = protocol_registry().find(protocol);
    if (it == protocol_registry().end())
        throw ConfigError("unknown protocol '" + std::string(protocol) + "'");
    return it->second(cfg, z, std::move(nodes), seed);
}

} // namespace hzsim

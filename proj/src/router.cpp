#include "zoneroute/router.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "zoneroute/error.hpp"

namespace zoneroute {

std::string to_string(MoveKind kind) {
  switch (kind) {
  case MoveKind::ToStorage: return "to-storage";
  case MoveKind::FromStorage: return "from-storage";
  case MoveKind::IntraCompute: return "intra-compute";
  case MoveKind::IntraStorage: return "intra-storage";
  }
  return "unknown";
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::PairNotColocated: return "PairNotColocated";
  case ViolationKind::SiteOverCapacity: return "SiteOverCapacity";
  case ViolationKind::UnpairedColocation: return "UnpairedColocation";
  case ViolationKind::StorageOverCapacity: return "StorageOverCapacity";
  }
  return "Unknown";
}

Move1Q make_move(QubitId q, const Site& from, const Site& to,
                 const Hardware& hw) {
  Move1Q m;
  m.qubit = q;
  m.from = from;
  m.to = to;
  m.from_pos = physical_position(from, hw.layout, hw.params);
  m.to_pos = physical_position(to, hw.layout, hw.params);
  m.distance_um = std::hypot(m.to_pos.x_um - m.from_pos.x_um,
                             m.to_pos.y_um - m.from_pos.y_um);
  const bool src_storage = from.zone == Zone::Storage;
  const bool dst_storage = to.zone == Zone::Storage;
  if (src_storage && dst_storage) {
    m.kind = MoveKind::IntraStorage;
  } else if (src_storage) {
    m.kind = MoveKind::FromStorage;
  } else if (dst_storage) {
    m.kind = MoveKind::ToStorage;
  } else {
    m.kind = MoveKind::IntraCompute;
  }
  return m;
}

CollMove make_collmove(std::vector<Move1Q> moves,
                       const HardwareParams& params) {
  CollMove cm;
  cm.moves = std::move(moves);
  for (const auto& m : cm.moves) {
    cm.max_distance_um = std::max(cm.max_distance_um, m.distance_um);
    cm.n_in += m.kind == MoveKind::ToStorage;
    cm.n_out += m.kind == MoveKind::FromStorage;
  }
  cm.duration_s = move_duration(cm.max_distance_um, params);
  return cm;
}

namespace {

/// Enumerates every site of one zone in row-major order.
template <typename F> void for_each_site(const ZoneLayout& l, Zone z, F&& f) {
  const int cols = z == Zone::Compute ? l.compute_cols : l.storage_cols;
  const int rows = z == Zone::Compute ? l.compute_rows : l.storage_rows;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      f(Site{z, c, r});
    }
  }
}

class StagePlanner {
public:
  StagePlanner(const Placement& current, const Stage& stage,
               RoutingMode mode, const Hardware& hw)
      : current_(current), stage_(stage), mode_(mode), hw_(hw),
        n_(current.num_qubits()), interacting_(n_, false), dest_(n_),
        labels_(n_) {}

  StageMoves run() {
    for (const auto& g : stage_.gates) {
      for (QubitId q : {g.a, g.b}) {
        if (!current_.is_placed(q)) {
          throw Error(ErrorKind::UnplacedQubit,
                      "stage references unplaced qubit " + std::to_string(q));
        }
        interacting_[q] = true;
      }
    }
    for (QubitId q = 0; q < n_; ++q) {
      current_.site_of(q);
    }

    if (mode_ == RoutingMode::WithStorage) {
      evict_to_storage();
    } else {
      declutter_compute();
    }
    label_gates();
    resolve_undecided();
    return finish();
  }

private:
  bool is_free(const Site& s) const {
    return current_.is_empty(s) && !reserved_.contains(s);
  }

  Position pos(const Site& s) const {
    return physical_position(s, hw_.layout, hw_.params);
  }

  /// Nearest free site of a zone; ties by row, then column.
  std::optional<Site> nearest_free(const Site& from, Zone zone) const {
    const auto p = pos(from);
    std::optional<Site> best;
    double best_d = std::numeric_limits<double>::infinity();
    for_each_site(hw_.layout, zone, [&](const Site& s) {
      if (!is_free(s)) {
        return;
      }
      const auto q = pos(s);
      const double d = std::hypot(q.x_um - p.x_um, q.y_um - p.y_um);
      // Row-major enumeration already visits (row, col) in tie order.
      if (d < best_d) {
        best_d = d;
        best = s;
      }
    });
    return best;
  }

  void send(QubitId q, const Site& to, Label label) {
    reserved_.insert(to);
    dest_[q] = to;
    labels_[q] = label;
  }

  void evict_to_storage() {
    std::vector<QubitId> evict;
    for (QubitId q = 0; q < n_; ++q) {
      if (!interacting_[q] && current_.site_of(q).zone == Zone::Compute) {
        evict.push_back(q);
      }
    }
    std::stable_sort(evict.begin(), evict.end(), [&](QubitId l, QubitId r) {
      return pos(current_.site_of(l)).y_um > pos(current_.site_of(r)).y_um;
    });
    for (QubitId q : evict) {
      const Site& from = current_.site_of(q);
      std::optional<Site> target;
      if (from.col < hw_.layout.storage_cols) {
        for (int row = 0; row < hw_.layout.storage_rows; ++row) {
          if (is_free(Site::storage(from.col, row))) {
            target = Site::storage(from.col, row);
            break;
          }
        }
      }
      if (!target) {
        target = nearest_free(from, Zone::Storage);
      }
      if (!target) {
        throw Error(ErrorKind::InsufficientStorage,
                    "no free storage site for qubit " + std::to_string(q));
      }
      send(q, *target, Label::Mobile);
    }
  }

  void declutter_compute() {
    for (QubitId q = 0; q < n_; ++q) {
      if (interacting_[q]) {
        continue;
      }
      const Site& at = current_.site_of(q);
      if (at.zone != Zone::Compute) {
        continue;
      }
      const auto others = current_.occupants(at);
      if (others.size() < 2) {
        continue;
      }
      // Of several non-interacting tenants the lowest id keeps the site.
      const bool keeps = std::none_of(
          others.begin(), others.end(),
          [&](QubitId o) { return o != q && (interacting_[o] || o < q); });
      if (keeps) {
        continue;
      }
      const auto target = nearest_free(at, Zone::Compute);
      if (!target) {
        throw Error(ErrorKind::InsufficientCompute,
                    "no free compute site to separate qubit " +
                        std::to_string(q));
      }
      send(q, *target, Label::Mobile);
    }
  }

  void set_static(QubitId q) {
    labels_[q] = Label::Static;
    static_sites_.insert(current_.site_of(q));
  }

  void follow(QubitId mobile, QubitId anchor) {
    labels_[mobile] = Label::Mobile;
    if (labels_[anchor] == Label::Static) {
      const Site& s = current_.site_of(anchor);
      if (current_.site_of(mobile) != s) {
        dest_[mobile] = s;
      }
    } else {
      followers_.emplace_back(anchor, mobile);
    }
  }

  void set_undecided(QubitId q) {
    labels_[q] = Label::Undecided;
    undecided_.push_back(q);
  }

  bool hosts_static(QubitId q) const {
    return static_sites_.contains(current_.site_of(q));
  }

  void label_gates() {
    auto gates = stage_.gates;
    std::sort(gates.begin(), gates.end());
    for (const auto& g : gates) {
      const Site& sa = current_.site_of(g.a);
      const Site& sb = current_.site_of(g.b);
      const bool a_stored = sa.zone == Zone::Storage;
      const bool b_stored = sb.zone == Zone::Storage;

      if (sa == sb && !a_stored) {
        set_static(g.a);
        set_static(g.b);
      } else if (a_stored && b_stored) {
        set_undecided(g.a);
        follow(g.b, g.a);
      } else if (a_stored || b_stored) {
        const QubitId stored = a_stored ? g.a : g.b;
        const QubitId placed = a_stored ? g.b : g.a;
        if (hosts_static(placed)) {
          set_undecided(placed);
        } else {
          set_static(placed);
        }
        follow(stored, placed);
      } else {
        const bool a_open = !hosts_static(g.a);
        const bool b_open = !hosts_static(g.b);
        if (a_open && !b_open) {
          set_static(g.a);
          follow(g.b, g.a);
        } else if (b_open) {
          set_static(g.b);
          follow(g.a, g.b);
        } else {
          set_undecided(g.b);
          follow(g.a, g.b);
        }
      }
    }
  }

  void resolve_undecided() {
    for (QubitId u : undecided_) {
      const auto target = nearest_free(current_.site_of(u), Zone::Compute);
      if (!target) {
        throw Error(ErrorKind::InsufficientCompute,
                    "no free compute site for qubit " + std::to_string(u));
      }
      send(u, *target, Label::Undecided);
    }
    for (const auto& [anchor, mobile] : followers_) {
      dest_[mobile] = dest_[anchor];
    }
  }

  StageMoves finish() {
    StageMoves out{{}, current_, labels_};
    for (QubitId q = 0; q < n_; ++q) {
      if (!dest_[q] || *dest_[q] == current_.site_of(q)) {
        continue;
      }
      out.moves.push_back(make_move(q, current_.site_of(q), *dest_[q], hw_));
      out.next.place(q, *dest_[q]);
    }
    return out;
  }

  const Placement& current_;
  const Stage& stage_;
  RoutingMode mode_;
  const Hardware& hw_;
  std::size_t n_;
  std::vector<bool> interacting_;
  std::vector<std::optional<Site>> dest_;
  std::vector<std::optional<Label>> labels_;
  std::set<Site> reserved_;
  std::set<Site> static_sites_;
  std::vector<QubitId> undecided_;
  std::vector<std::pair<QubitId, QubitId>> followers_; // (anchor, mobile)
};

int order_sign(double a, double b) { return (a > b) - (a < b); }

} // namespace

StageMoves plan_stage_moves(const Placement& current, const Stage& stage,
                            RoutingMode mode, const Hardware& hw) {
  return StagePlanner(current, stage, mode, hw).run();
}

bool conflicts(const Move1Q& m1, const Move1Q& m2) {
  const bool x_kept = order_sign(m1.from_pos.x_um, m2.from_pos.x_um) ==
                      order_sign(m1.to_pos.x_um, m2.to_pos.x_um);
  const bool y_kept = order_sign(m1.from_pos.y_um, m2.from_pos.y_um) ==
                      order_sign(m1.to_pos.y_um, m2.to_pos.y_um);
  return !(x_kept && y_kept);
}

std::vector<CollMove> group_moves(std::vector<Move1Q> moves,
                                  const HardwareParams& params) {
  std::sort(moves.begin(), moves.end(), [](const Move1Q& l, const Move1Q& r) {
    if (l.distance_um != r.distance_um) {
      return l.distance_um < r.distance_um;
    }
    return l.qubit < r.qubit;
  });
  std::vector<std::vector<Move1Q>> groups;
  for (auto& m : moves) {
    auto fits = [&](const std::vector<Move1Q>& g) {
      return std::none_of(g.begin(), g.end(), [&](const Move1Q& other) {
        return conflicts(m, other);
      });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end()) {
      groups.emplace_back();
      it = std::prev(groups.end());
    }
    it->push_back(std::move(m));
  }
  std::vector<CollMove> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    out.push_back(make_collmove(std::move(g), params));
  }
  return out;
}

Placement apply_collmove(const Placement& p, const CollMove& cm,
                         CapacityCheck check) {
  for (const auto& m : cm.moves) {
    if (!p.is_placed(m.qubit) || p.site_of(m.qubit) != m.from) {
      throw Error(ErrorKind::StaleMove,
                  "qubit " + std::to_string(m.qubit) + " is not at " +
                      to_string(m.from));
    }
  }
  Placement next = p;
  for (const auto& m : cm.moves) {
    next.place(m.qubit, m.to);
  }
  if (check == CapacityCheck::Full) {
    next.check_capacity();
  } else {
    for (const auto& s : next.overfull_sites()) {
      if (s.zone == Zone::Storage) {
        throw Error(ErrorKind::OccupancyViolation,
                    to_string(s) + " holds more than one qubit");
      }
    }
  }
  return next;
}

std::vector<LayoutViolation> validate_layout(const Placement& p,
                                             const Stage& stage) {
  std::vector<LayoutViolation> out;
  std::set<CZGate> gates(stage.gates.begin(), stage.gates.end());

  for (const auto& g : stage.gates) {
    const std::string pair =
        "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    if (!p.is_placed(g.a) || !p.is_placed(g.b)) {
      out.push_back({ViolationKind::PairNotColocated,
                     "gate " + pair + " references an unplaced qubit"});
      continue;
    }
    const Site& sa = p.site_of(g.a);
    const Site& sb = p.site_of(g.b);
    if (sa != sb || sa.zone != Zone::Compute) {
      out.push_back({ViolationKind::PairNotColocated,
                     "gate " + pair + " at " + to_string(sa) + " and " +
                         to_string(sb)});
    }
  }

  const auto& layout = p.layout();
  for_each_site(layout, Zone::Compute, [&](const Site& s) {
    const auto occ = p.occupants(s);
    if (occ.size() > 2) {
      out.push_back({ViolationKind::SiteOverCapacity,
                     to_string(s) + " holds " + std::to_string(occ.size()) +
                         " qubits"});
    } else if (occ.size() == 2 &&
               !gates.contains(CZGate::between(occ[0], occ[1]))) {
      out.push_back({ViolationKind::UnpairedColocation,
                     "qubits " + std::to_string(occ[0]) + " and " +
                         std::to_string(occ[1]) + " share " + to_string(s)});
    }
  });
  for_each_site(layout, Zone::Storage, [&](const Site& s) {
    if (p.occupants(s).size() > 1) {
      out.push_back({ViolationKind::StorageOverCapacity,
                     to_string(s) + " holds " +
                         std::to_string(p.occupants(s).size()) + " qubits"});
    }
  });
  return out;
}

} // namespace zoneroute

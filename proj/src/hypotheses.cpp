#include <algorithm>
#include <map>
#include <set>

#include "partstat/error.hpp"
#include "partstat/sieve.hpp"

namespace partstat {

namespace {

struct Position {
  FamilyIndex index;
  Multiset f;
  Multiset g;
  std::int64_t weight_f = 0;
  std::int64_t weight_g = 0;
};

// Aligned indices at which either side has a member of weight <= n_max,
// sorted by (strand, t).
std::vector<Position> aligned_positions(const FamilyPair& pair, std::int64_t n_max) {
  std::set<FamilyIndex> indices;
  for (const auto& idx : pair.f().relevant_indices(n_max)) indices.insert(idx);
  for (const auto& idx : pair.g().relevant_indices(n_max)) indices.insert(idx);
  std::vector<Position> out;
  for (const auto& idx : indices) {
    Position pos{idx, pair.f().member(idx), pair.g().member(idx)};
    pos.weight_f = weight(pos.f);
    pos.weight_g = weight(pos.g);
    out.push_back(std::move(pos));
  }
  return out;
}

std::optional<Witness> first_shared_support(const std::vector<Position>& positions, bool f_side) {
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      const auto& x = f_side ? positions[a].f : positions[a].g;
      const auto& y = f_side ? positions[b].f : positions[b].g;
      if (const Part shared = first_shared_size(x, y); shared != 0) {
        Witness w;
        w.kind = f_side ? Witness::Kind::shared_support_f : Witness::Kind::shared_support_g;
        w.indices = {positions[a].index, positions[b].index};
        w.shared_size = shared;
        return w;
      }
    }
  }
  return std::nullopt;
}

class UnionWalker {
 public:
  UnionWalker(const std::vector<Position>& positions, std::int64_t n_max, std::uint64_t cap)
      : positions_(positions), n_max_(n_max), cap_(cap) {}

  void run() {
    if (!count()) return;
    walk(Multiset{}, Multiset{}, 0);
  }

  std::uint64_t explored = 0;
  bool truncated = false;
  std::optional<Witness> witness;

 private:
  bool count() {
    if (explored >= cap_) {
      truncated = true;
      return false;
    }
    ++explored;
    return true;
  }

  void walk(const Multiset& uf, const Multiset& ug, std::size_t start) {
    for (std::size_t i = start; i < positions_.size(); ++i) {
      if (truncated || witness) return;
      Multiset nf = multiset_union(uf, positions_[i].f);
      Multiset ng = multiset_union(ug, positions_[i].g);
      const auto wf = weight(nf);
      const auto wg = weight(ng);
      // Union weights only grow as S grows, so the whole branch is out of range.
      if (std::min(wf, wg) > n_max_) continue;
      if (!count()) return;
      path_.push_back(positions_[i].index);
      if (wf != wg) {
        witness = Witness{Witness::Kind::union_weight_mismatch, path_, 0, wf, wg};
        return;
      }
      walk(nf, ng, i + 1);
      path_.pop_back();
    }
  }

  const std::vector<Position>& positions_;
  std::int64_t n_max_;
  std::uint64_t cap_;
  std::vector<FamilyIndex> path_;
};

}  // namespace

HypothesisReport check_theorem_b(const FamilyPair& pair, std::int64_t n_max) {
  if (n_max < 1) throw Error(ErrorCode::invalid_argument, "check needs n_max >= 1");
  HypothesisReport report;
  report.theorem = Theorem::B;
  report.verified_up_to = n_max;
  const auto positions = aligned_positions(pair, n_max);

  auto witness = first_shared_support(positions, true);
  if (!witness) witness = first_shared_support(positions, false);
  if (!witness) {
    for (const auto& pos : positions) {
      if (pos.weight_f != pos.weight_g) {
        witness = Witness{Witness::Kind::weight_mismatch, {pos.index}, 0, pos.weight_f, pos.weight_g};
        break;
      }
    }
  }
  if (witness) {
    report.status = HypothesisStatus::violated;
    report.witness = std::move(witness);
  }
  return report;
}

HypothesisReport check_theorem_c(const FamilyPair& pair, std::int64_t n_max, std::uint64_t subset_cap) {
  if (n_max < 1) throw Error(ErrorCode::invalid_argument, "check needs n_max >= 1");
  if (subset_cap == 0) throw Error(ErrorCode::invalid_argument, "subset cap must be > 0");
  HypothesisReport report;
  report.theorem = Theorem::C;
  report.verified_up_to = n_max;
  const auto positions = aligned_positions(pair, n_max);

  UnionWalker walker(positions, n_max, subset_cap);
  walker.run();
  report.subsets_explored = walker.explored;
  if (walker.witness) {
    report.status = HypothesisStatus::violated;
    report.witness = std::move(walker.witness);
  } else if (walker.truncated) {
    report.status = HypothesisStatus::inconclusive;
  }
  return report;
}

namespace {

// Deliberately avoids Multiset helpers: sizes and multiplicities are read
// straight off the flat part lists.
std::map<Part, std::int64_t> flat_counts(const Multiset& m) {
  std::map<Part, std::int64_t> out;
  for (Part p : m.parts_descending()) ++out[p];
  return out;
}

std::int64_t flat_weight(const std::map<Part, std::int64_t>& counts) {
  std::int64_t w = 0;
  for (const auto& [size, mult] : counts) {
    for (std::int64_t k = 0; k < mult; ++k) w += size;
  }
  return w;
}

std::int64_t max_union_weight(const MultisetFamily& fam, const std::vector<FamilyIndex>& s) {
  std::map<Part, std::int64_t> acc;
  for (const auto& idx : s) {
    for (const auto& [size, mult] : flat_counts(fam.member(idx))) acc[size] = std::max(acc[size], mult);
  }
  return flat_weight(acc);
}

}  // namespace

bool revalidate_witness(const FamilyPair& pair, const Witness& witness) {
  switch (witness.kind) {
    case Witness::Kind::shared_support_f:
    case Witness::Kind::shared_support_g: {
      if (witness.indices.size() != 2 || witness.indices[0] == witness.indices[1]) return false;
      const auto& fam = witness.kind == Witness::Kind::shared_support_f ? pair.f() : pair.g();
      const auto a = flat_counts(fam.member(witness.indices[0]));
      const auto b = flat_counts(fam.member(witness.indices[1]));
      return a.count(witness.shared_size) > 0 && b.count(witness.shared_size) > 0;
    }
    case Witness::Kind::weight_mismatch: {
      if (witness.indices.size() != 1) return false;
      const auto wf = flat_weight(flat_counts(pair.f().member(witness.indices[0])));
      const auto wg = flat_weight(flat_counts(pair.g().member(witness.indices[0])));
      return wf != wg && wf == witness.weight_f && wg == witness.weight_g;
    }
    case Witness::Kind::union_weight_mismatch: {
      std::set<FamilyIndex> distinct(witness.indices.begin(), witness.indices.end());
      if (distinct.size() != witness.indices.size() || distinct.empty()) return false;
      const auto wf = max_union_weight(pair.f(), witness.indices);
      const auto wg = max_union_weight(pair.g(), witness.indices);
      return wf != wg && wf == witness.weight_f && wg == witness.weight_g;
    }
  }
  return false;
}

}  // namespace partstat

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsg/autsearch.hpp"
#include "tsg/grouplab.hpp"
#include "tsg/paperlib.hpp"
#include "tsg/petersen.hpp"

namespace tsg {

enum class Decision { Yes, No, Unknown, ExternalReference };
std::string to_string(Decision d);

enum class ObstructionKind {
  Order2SixTwoCycles,
  Order4AdjacentTwoCycle,
  Order6WithThreeCycles,
  Order4FormViolation,
  GroupFormZrZ4,
};
std::string to_string(ObstructionKind k);

struct Obstruction {
  ObstructionKind kind;
  std::optional<Permutation> witness_element;
  std::string description;
};

struct Verdict {
  Decision realizable = Decision::Unknown;
  Decision positively_realizable = Decision::Unknown;
  std::vector<Citation> citations;
  std::optional<Obstruction> witness;
};

/// Whether p satisfies the defining predicate of an element-level kind
/// (the first three kinds); always false for the group-level kinds.
bool has_element_property(const PetersenGraph& g, const Permutation& p, ObstructionKind kind);

/// One entry per element-level kind present in H, each witnessed by the
/// least element of H (in canonical element order) with that property.
/// Throws NotASubgroupError unless every element of H is an automorphism.
std::vector<Obstruction> obstruction_scan(const PetersenGraph& g, const PermGroup& h);

struct Order4FormResult {
  std::vector<Permutation> order4_elements;  // sorted
  bool all_of_form = false;                  // equals { rho^m alpha^(+-1) }
};

/// Order-4 elements of B(n,k) for k^2 = -1 mod n; ConstructionError otherwise.
Order4FormResult order4_form_check(int n, int k);

struct ClassifiedClass {
  SubgroupClass subgroup_class;
  Verdict verdict;
};

/// Realizability verdicts for the subgroups of Aut(P(n,k)).
class Classifier {
 public:
  /// Throws ConstructionError for inadmissible (n, k). Citations and the
  /// P(10,3) label lists come from `registry`, by default the embedded one.
  Classifier(int n, int k, SearchOptions search = {},
             const PaperRegistry& registry = PaperRegistry::instance());

  int n() const noexcept { return graph_.n(); }
  int k() const noexcept { return graph_.k(); }
  const PetersenGraph& graph() const noexcept { return graph_; }
  const PermGroup& automorphisms() const noexcept { return aut_; }

  /// Throws NotASubgroupError unless H <= Aut(P(n,k)).
  Verdict classify(const PermGroup& h) const;
  /// One row per conjugacy class of subgroups, in lattice order.
  /// Throws SizeLimitError when |Aut| exceeds the lattice cap.
  std::vector<ClassifiedClass> classify_all(GroupLabOptions options = {}) const;

  /// Number of conjugates of H in Aut(P(n,k)).
  std::size_t class_size(const PermGroup& h) const;

 private:
  Verdict decide(const PermGroup& h, const GroupLabel& label) const;

  const PaperRegistry* registry_;
  PetersenGraph graph_;
  PermGroup aut_;
  PermGroup dihedral_;
  std::set<GroupLabel> not_positive_;
};

Verdict classify(int n, int k, const PermGroup& h);
std::vector<ClassifiedClass> classify_all(int n, int k);

/// {"n","k","subgroup_label","class_size","realizable","positively_realizable",
///  "citations":[{"id","quote"}],"witness":null|{"kind","element","description"}}
std::string verdict_json(int n, int k, const std::string& subgroup_label, std::size_t class_size,
                         const Verdict& v);

}  // namespace tsg

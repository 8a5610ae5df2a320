#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsg/group_label.hpp"
#include "tsg/permutation.hpp"
#include "tsg/vertex.hpp"

namespace tsg {

struct Citation {
  std::string id;
  std::string quote;
};

struct ClaimCitation {
  std::string id;
  std::string scope;
  std::string location;
  std::string quote;
};

struct NamedAutomorphism {
  std::string name;
  int n = 0;
  int k = 0;
  std::string cycles;  // as printed; empty for constructed generators
  Permutation perm;
  Citation citation;
  std::vector<std::string> flags;
};

enum class ExceptionalStatus { FullyClassified, ExternalReference, Deferred };
std::string to_string(ExceptionalStatus s);

struct ExceptionalRecord {
  int n = 0;
  int k = 0;
  GroupLabel aut_label = GroupLabel::named("trivial");
  std::size_t aut_order = 0;
  ExceptionalStatus status = ExceptionalStatus::Deferred;
  Citation citation;
};

struct NamedVertexSet {
  std::string name;
  int n = 0;
  int k = 0;
  std::set<Vertex> vertices;
  Citation citation;
};

/// The three cases of the spoke-preserving group B(n,k).
enum class Trichotomy { Dihedral, PlusOne, MinusOne };
Trichotomy trichotomy(int n, int k);
std::string to_string(Trichotomy t);

bool is_exceptional(int n, int k);

/// Read-only registry loaded from the embedded JSON resource. Every
/// permutation is parsed from its printed cycle string and checked to be an
/// automorphism of its graph when the registry is first used; a bad entry
/// throws NotAutomorphismError naming the entry and its citation.
class PaperRegistry {
 public:
  static const PaperRegistry& instance();
  /// Loads a registry from JSON text (the embedded resource or a test copy).
  static PaperRegistry load(std::string_view json);
  /// The embedded resource, byte for byte.
  static std::string_view embedded_json();

  int version() const noexcept { return version_; }
  const std::vector<NamedAutomorphism>& automorphisms() const noexcept { return automorphisms_; }
  const std::vector<NamedVertexSet>& vertex_sets() const noexcept { return vertex_sets_; }
  /// Throws UnknownPairError when no entry has this graph and name.
  const NamedAutomorphism& get(int n, int k, std::string_view name) const;
  /// Theorem citation by id; throws std::out_of_range.
  const Citation& theorem(std::string_view id) const;

  struct ExceptionalEntry {
    int n, k;
    std::string aut_label;  // empty when the registry gives none
    ExceptionalStatus status;
    Citation citation;
  };
  const std::vector<ExceptionalEntry>& exceptional_entries() const noexcept { return exceptional_; }

  /// Isomorphism types of proper nontrivial subgroups of Aut(P(10,3)), as
  /// printed and as corrected.
  const std::vector<std::string>& p103_subgroups_printed() const noexcept { return p103_printed_; }
  const std::vector<std::string>& p103_subgroups_corrected() const noexcept { return p103_corrected_; }
  const Citation& p103_subgroups_citation() const noexcept { return p103_citation_; }
  /// Label lists of the P(10,3) summary theorem.
  const std::vector<std::string>& p103_not_positive() const noexcept { return p103_not_positive_; }
  const std::vector<std::string>& p103_positive() const noexcept { return p103_positive_; }

  /// Quote anchors of the verification claims, in suite order.
  const std::vector<ClaimCitation>& claims() const noexcept { return claims_; }
  /// Throws std::out_of_range.
  const ClaimCitation& claim(std::string_view id) const;

 private:
  int version_ = 0;
  std::vector<NamedAutomorphism> automorphisms_;
  std::vector<NamedVertexSet> vertex_sets_;
  std::vector<ExceptionalEntry> exceptional_;
  std::vector<Citation> theorems_;
  std::vector<std::string> p103_printed_, p103_corrected_;
  Citation p103_citation_;
  std::vector<std::string> p103_not_positive_, p103_positive_;
  std::vector<ClaimCitation> claims_;
};

/// rho and sigma, plus alpha (u_i -> v_{ki}, v_i -> u_{ki}) when k^2 = +-1 mod n.
/// Throws ConstructionError for inadmissible (n, k).
std::vector<NamedAutomorphism> bnk_generators(int n, int k);

/// Registry entries for (4,1), (8,3), (10,2), (10,3); UnknownPairError otherwise.
std::vector<NamedAutomorphism> named_automorphisms(int n, int k);
const NamedAutomorphism& named_automorphism(int n, int k, std::string_view name);

/// T1, T2 for (10,2); A, B, U for (8,3); UnknownPairError otherwise.
std::map<std::string, std::set<Vertex>> special_vertex_sets(int n, int k);

/// The seven exceptional pairs. Labels of the deferred pairs, which the
/// registry leaves open, are computed from the automorphism group.
const std::vector<ExceptionalRecord>& exceptional_catalog();

}  // namespace tsg

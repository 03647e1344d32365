#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotcert/module.hpp"
#include "knotcert/seifert.hpp"

namespace knotcert {

enum class Underlying { Sphere, ProductS3xS2, Other };
enum class SingularKind { None, DoublePointsOnly, Other };

std::string to_string(Underlying u);
std::string to_string(SingularKind k);

/*
 * Symbolic descriptor of a knot construction. The projection data (mu,
 * singular_kind) are declared facts of the construction, transcribed with a
 * provenance note -- they are not computable from the algebra. The
 * construction is a Base leaf wrapped in `spins` Spin nodes; each Spin node
 * raises the dimension by one and carries every other field over unchanged.
 */
struct KnotDescriptor {
  std::string name;
  int n = 1;                       // knot dimension
  Underlying underlying = Underlying::Sphere;
  std::string underlying_label;    // set when underlying == Other
  std::optional<SeifertMatrix> seifert;       // spheres only
  std::optional<ModulePresentation> module_h3;  // declared when seifert is absent
  int mu = 0;                      // components of the projection's singular set
  SingularKind singular_kind = SingularKind::None;
  std::string construction_base;   // label of the Base leaf
  int spins = 0;                   // Spin nodes above the base
  std::string provenance;          // where the declared data comes from

  bool operator==(const KnotDescriptor&) const = default;
};

// Enforces descriptor coherence: mu = 0 iff no singular set, double points
// need mu >= 1, spin arithmetic keeps the base dimension >= 1, and at least
// one algebraic datum is present. Throws std::invalid_argument.
void check_descriptor(const KnotDescriptor& k);

// One dimension up; mu, singular kind and the algebraic data carry over
// (rotation preserves the projection's singular combinatorics and the
// Alexander data). Requires n >= 1.
KnotDescriptor spin(const KnotDescriptor& k);

// The truly knotted n-sphere with mu(P) = 2 (n >= 5): Seifert matrix
// [[1,1],[0,-1]] with q = 3, spun up from the 5-dimensional base.
KnotDescriptor build_theorem1_knot(int n);

// The spun-trefoil tower (n >= 1): mu = 3 and a double-point singular set in
// every dimension, Seifert matrix [[-1,1],[0,-1]] with q = 1.
KnotDescriptor build_trefoil_tower(int n);

// The inequivalent pair of embedded S^3 x S^2 copies (n >= 5): K0 projects
// injectively and has trivial cover homology; K1 has one double-point
// component and cover homology Lambda/(t-1).
std::pair<KnotDescriptor, KnotDescriptor> build_theorem3_pair(int n);

// K, -K, K*, -K*. Seifert data transforms by transpose / negated transpose;
// module data by inverting the deck transformation.
std::array<KnotDescriptor, 4> orientation_variants(const KnotDescriptor& k);

// Routes to the Seifert certificate when a Seifert matrix is present, else
// to the module order-ideal test; throws NoAlgebraicDataError.
KnottednessCertificate certificate_of(const KnotDescriptor& k);

// The base constructions, for `catalog list`.
std::vector<KnotDescriptor> catalog_entries();

struct TheoremCheck {
  std::string description;
  bool passed = false;
  std::string evidence;
};

class TheoremReport {
 public:
  TheoremReport(int theorem, std::optional<int> n) : theorem_(theorem), n_(n) {}

  void add(std::string description, bool passed, std::string evidence);

  int theorem() const { return theorem_; }
  std::optional<int> n() const { return n_; }
  const std::vector<TheoremCheck>& checks() const { return checks_; }
  bool overall() const;  // conjunction of the checks

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  int theorem_;
  std::optional<int> n_;
  std::vector<TheoremCheck> checks_;
};

// Re-runs the algebra behind each theorem and reports per-claim results.
TheoremReport verify_theorem1(int n);
// Enumerates the eight candidate Seifert matrices [[+-1,+-1],[0,+-1]] of the
// theorem-1 projection and checks every Alexander class is a non-unit.
TheoremReport verify_theorem2();
TheoremReport verify_theorem3(int n);

// Versioned JSON document: {schema_version, name, n, underlying, mu,
// singular_kind, seifert | null, module | null, construction, provenance}.
nlohmann::json descriptor_to_json(const KnotDescriptor& k);
KnotDescriptor descriptor_from_json(const nlohmann::json& j);

}  // namespace knotcert

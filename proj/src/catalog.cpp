#include "knotcert/catalog.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "knotcert/errors.hpp"

namespace knotcert {

std::string to_string(Underlying u) {
  switch (u) {
    case Underlying::Sphere: return "sphere";
    case Underlying::ProductS3xS2: return "s3-x-s2";
    case Underlying::Other: return "other";
  }
  return "other";
}

std::string to_string(SingularKind k) {
  switch (k) {
    case SingularKind::None: return "none";
    case SingularKind::DoublePointsOnly: return "double-points-only";
    case SingularKind::Other: return "other";
  }
  return "other";
}

void check_descriptor(const KnotDescriptor& k) {
  if (k.n < 1) throw std::invalid_argument("descriptor dimension must be >= 1");
  if (k.mu < 0) throw std::invalid_argument("mu must be nonnegative");
  if (k.spins < 0 || k.n - k.spins < 1)
    throw std::invalid_argument("spin count inconsistent with dimension: base would be below 1");
  if ((k.mu == 0) != (k.singular_kind == SingularKind::None))
    throw std::invalid_argument("mu = 0 exactly when the singular set is empty");
  if (k.singular_kind == SingularKind::DoublePointsOnly && k.mu < 1)
    throw std::invalid_argument("a double-point singular set needs mu >= 1");
  if (!k.seifert && !k.module_h3)
    throw std::invalid_argument("descriptor needs a Seifert matrix or a module presentation");
}

KnotDescriptor spin(const KnotDescriptor& k) {
  if (k.n < 1) throw std::invalid_argument("spin requires dimension >= 1");
  KnotDescriptor s = k;
  s.n += 1;
  s.spins += 1;
  return s;
}

namespace {

KnotDescriptor spin_up_to(KnotDescriptor k, int n) {
  while (k.n < n) k = spin(k);
  return k;
}

}  // namespace

KnotDescriptor build_theorem1_knot(int n) {
  if (n < 5) throw std::invalid_argument("the mu(P) = 2 sphere construction requires n >= 5");
  KnotDescriptor k;
  k.name = "theorem1-knot";
  k.n = 5;
  k.underlying = Underlying::Sphere;
  k.seifert = SeifertMatrix::validate(IntMatrix::parse("1,1;0,-1"), 3);
  k.mu = 2;
  k.singular_kind = SingularKind::DoublePointsOnly;
  k.construction_base = "double-tube-5-sphere";
  k.provenance =
      "5-sphere assembled from two oppositely oriented immersed-tube pieces glued across the "
      "boundary of a 6-ball; declared data: mu = 2, double points only; Seifert matrix "
      "[[1,1],[0,-1]] with q = 3";
  check_descriptor(k);
  return spin_up_to(std::move(k), n);
}

KnotDescriptor build_trefoil_tower(int n) {
  if (n < 1) throw std::invalid_argument("the trefoil tower requires n >= 1");
  KnotDescriptor k;
  k.name = "trefoil-tower";
  k.n = 1;
  k.underlying = Underlying::Sphere;
  k.seifert = SeifertMatrix::validate(IntMatrix::parse("-1,1;0,-1"), 1);
  k.mu = 3;
  k.singular_kind = SingularKind::DoublePointsOnly;
  k.construction_base = "trefoil";
  k.provenance =
      "0-twist spun tower over the classical trefoil; declared data: mu = 3 with double points "
      "only at every stage; Seifert matrix [[-1,1],[0,-1]] with q = 1";
  check_descriptor(k);
  return spin_up_to(std::move(k), n);
}

std::pair<KnotDescriptor, KnotDescriptor> build_theorem3_pair(int n) {
  if (n < 5) throw std::invalid_argument("the S^3 x S^2 pair requires n >= 5");

  KnotDescriptor k0;
  k0.name = "theorem3-k0";
  k0.n = 5;
  k0.underlying = Underlying::ProductS3xS2;
  k0.module_h3 = ModulePresentation();  // zero module
  k0.mu = 0;
  k0.singular_kind = SingularKind::None;
  k0.construction_base = "tube-boundary-embedded";
  k0.provenance =
      "boundary of a tubular neighborhood of a trivially embedded 3-sphere in R^6; the "
      "projection is injective and H_3 of the infinite cyclic cover vanishes";
  check_descriptor(k0);

  KnotDescriptor k1;
  k1.name = "theorem3-k1";
  k1.n = 5;
  k1.underlying = Underlying::ProductS3xS2;
  k1.module_h3 = ModulePresentation(LaurentMatrix::parse("t-1"));
  k1.mu = 1;
  k1.singular_kind = SingularKind::DoublePointsOnly;
  k1.construction_base = "tube-boundary-one-double-point";
  k1.provenance =
      "boundary of the normal disc bundle over a self-transverse immersed 3-sphere with one "
      "double point, pushed off to embed; the singular set of the projection is a connected "
      "S^2 x S^2 of double points and H_3 of the cover is Lambda/(t-1)";
  check_descriptor(k1);

  return {spin_up_to(std::move(k0), n), spin_up_to(std::move(k1), n)};
}

std::array<KnotDescriptor, 4> orientation_variants(const KnotDescriptor& k) {
  std::array<KnotDescriptor, 4> out{k, k, k, k};
  const char* suffix[4] = {"", "-rev", "-mirror", "-rev-mirror"};
  for (int v = 1; v < 4; ++v) {
    out[v].name = k.name + suffix[v];
    if (k.seifert) {
      switch (v) {
        case 1: out[v].seifert = reverse(*k.seifert); break;
        case 2: out[v].seifert = mirror(*k.seifert); break;
        case 3: out[v].seifert = mirror(reverse(*k.seifert)); break;
      }
    }
    if (k.module_h3) {
      // Reversal and mirroring each invert the deck transformation; doing
      // both restores it.
      out[v].module_h3 = (v == 3) ? *k.module_h3 : conjugated(*k.module_h3);
    }
  }
  return out;
}

KnottednessCertificate certificate_of(const KnotDescriptor& k) {
  if (k.seifert) return knottedness_certificate(*k.seifert);
  if (k.module_h3) {
    AlexanderClass cls = cyclic_class(*k.module_h3);
    if (!cls.is_zero() && !cls.is_unit()) {
      return {Verdict::TrulyKnotted, cls,
              "presented cover homology is nontrivial (order ideal generated by " +
                  cls.to_string() + "), which distinguishes this embedding from any with "
                  "trivial cover homology"};
    }
    if (cls.is_unit()) {
      return {Verdict::NotDistinguished, cls,
              "presented cover homology is trivial; the module invariant carries no "
              "obstruction"};
    }
    return {Verdict::NotDistinguished, cls,
            "order ideal vanishes; the cyclic order-ideal test does not decide this module"};
  }
  throw NoAlgebraicDataError();
}

std::vector<KnotDescriptor> catalog_entries() {
  auto pair = build_theorem3_pair(5);
  return {build_theorem1_knot(5), build_trefoil_tower(1), pair.first, pair.second};
}

void TheoremReport::add(std::string description, bool passed, std::string evidence) {
  checks_.push_back({std::move(description), passed, std::move(evidence)});
}

bool TheoremReport::overall() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::string TheoremReport::to_text() const {
  std::string out = "theorem " + std::to_string(theorem_);
  if (n_) out += " (n = " + std::to_string(*n_) + ")";
  out += "\n";
  for (const auto& c : checks_) {
    out += c.passed ? "  [ok] " : "  [FAIL] ";
    out += c.description;
    if (!c.evidence.empty()) out += ": " + c.evidence;
    out += "\n";
  }
  out += overall() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_)
    checks.push_back({{"description", c.description}, {"passed", c.passed}, {"evidence", c.evidence}});
  nlohmann::json j{{"theorem", theorem_}, {"checks", checks}, {"overall", overall()}};
  if (n_)
    j["n"] = *n_;
  else
    j["n"] = nullptr;
  return j;
}

TheoremReport verify_theorem1(int n) {
  KnotDescriptor k = build_theorem1_knot(n);
  TheoremReport r(1, n);
  r.add("knot is a sphere spun up from the 5-dimensional base",
        k.underlying == Underlying::Sphere && k.n == n && k.spins == n - 5,
        "n = " + std::to_string(k.n) + ", spins = " + std::to_string(k.spins));
  r.add("projection bookkeeping: mu = 2 with a double-point singular set",
        k.mu == 2 && k.singular_kind == SingularKind::DoublePointsOnly,
        "mu = " + std::to_string(k.mu) + ", singular set " + to_string(k.singular_kind));
  const AlexanderClass cls = alexander_class(*k.seifert);
  const AlexanderClass expected(LaurentPoly::parse("t^2 - 3*t + 1"));
  r.add("Alexander class of Seifert matrix [[1,1],[0,-1]] is t^2 - 3*t + 1", cls == expected,
        cls.to_string());
  const KnottednessCertificate cert = certificate_of(k);
  r.add("certificate: truly knotted", cert.verdict == Verdict::TrulyKnotted,
        to_string(cert.verdict) + ", evidence " + cert.evidence.to_string());
  return r;
}

TheoremReport verify_theorem2() {
  TheoremReport r(2, std::nullopt);
  std::set<std::string> distinct;
  bool all_checked = true;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int d : {1, -1}) {
        IntMatrix m(2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 1) = d;
        const std::string label = "[[" + std::to_string(a) + "," + std::to_string(b) + "],[0," +
                                  std::to_string(d) + "]]";
        try {
          const SeifertMatrix s = SeifertMatrix::validate(m, 3);
          const AlexanderClass cls = alexander_class(s);
          const bool ok = !cls.is_zero() && !cls.is_unit();
          all_checked = all_checked && ok;
          distinct.insert(cls.to_string());
          r.add("candidate Seifert matrix " + label + " (q = 3) has a non-unit Alexander class",
                ok, cls.to_string());
        } catch (const Error& e) {
          all_checked = false;
          r.add("candidate Seifert matrix " + label + " (q = 3) has a non-unit Alexander class",
                false, e.what());
        }
      }
  std::string classes;
  for (const auto& c : distinct) classes += (classes.empty() ? "" : ", ") + c;
  r.add("distinct Alexander classes across the eight candidates",
        all_checked && distinct == std::set<std::string>{"t^2 - 3*t + 1", "t^2 - t + 1"},
        "{" + classes + "}");
  return r;
}

TheoremReport verify_theorem3(int n) {
  auto [k0, k1] = build_theorem3_pair(n);
  TheoremReport r(3, n);
  r.add("K0 cover homology (0x0 presentation) is trivial", is_trivial(*k0.module_h3),
        "order ideal generated by " + cyclic_class(*k0.module_h3).to_string());
  const AlexanderClass cls1 = cyclic_class(*k1.module_h3);
  r.add("K1 cover homology Lambda/(t-1) is nontrivial",
        !is_trivial(*k1.module_h3) && cls1 == AlexanderClass(LaurentPoly::parse("t-1")),
        "order ideal generated by " + cls1.to_string());
  r.add("K0 and K1 present different cyclic modules",
        !same_cyclic_module(*k0.module_h3, *k1.module_h3), "modules differ");
  bool variants_ok = true;
  for (const auto& variant : orientation_variants(k1)) {
    variants_ok = variants_ok && !same_cyclic_module(*k0.module_h3, *variant.module_h3) &&
                  cyclic_class(*variant.module_h3) == cls1;
  }
  r.add("all four orientation variants of K1 share the class t - 1 and stay distinct from K0",
        variants_ok, cls1.to_string());
  r.add("projection bookkeeping: mu(P0) = 0 with no singular set, mu(P1) = 1 with double points",
        k0.mu == 0 && k0.singular_kind == SingularKind::None && k1.mu == 1 &&
            k1.singular_kind == SingularKind::DoublePointsOnly,
        "mu(P0) = " + std::to_string(k0.mu) + ", mu(P1) = " + std::to_string(k1.mu));
  r.add("both descriptors spun to the requested dimension",
        k0.n == n && k1.n == n && k0.spins == n - 5 && k1.spins == n - 5,
        "n = " + std::to_string(n) + ", spins = " + std::to_string(k0.spins));
  return r;
}

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer matrix entry");
}

std::string underlying_to_json(const KnotDescriptor& k) {
  if (k.underlying == Underlying::Other) return "other:" + k.underlying_label;
  return to_string(k.underlying);
}

void underlying_from_json(const std::string& text, KnotDescriptor& k) {
  if (text == "sphere") {
    k.underlying = Underlying::Sphere;
  } else if (text == "s3-x-s2") {
    k.underlying = Underlying::ProductS3xS2;
  } else if (text.rfind("other:", 0) == 0) {
    k.underlying = Underlying::Other;
    k.underlying_label = text.substr(6);
  } else {
    throw ParseError("unknown underlying manifold \"" + text + "\"");
  }
}

SingularKind singular_kind_from_json(const std::string& text) {
  if (text == "none") return SingularKind::None;
  if (text == "double-points-only") return SingularKind::DoublePointsOnly;
  if (text == "other") return SingularKind::Other;
  throw ParseError("unknown singular kind \"" + text + "\"");
}

}  // namespace

nlohmann::json descriptor_to_json(const KnotDescriptor& k) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["name"] = k.name;
  j["n"] = k.n;
  j["underlying"] = underlying_to_json(k);
  j["mu"] = k.mu;
  j["singular_kind"] = to_string(k.singular_kind);
  if (k.seifert) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < k.seifert->size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t jj = 0; jj < k.seifert->size(); ++jj)
        row.push_back(bigint_to_json(k.seifert->matrix().at(i, jj)));
      rows.push_back(row);
    }
    j["seifert"] = {{"matrix", rows}, {"q", k.seifert->q()}};
  } else {
    j["seifert"] = nullptr;
  }
  if (k.module_h3)
    j["module"] = {{"presentation", k.module_h3->matrix().to_string()}};
  else
    j["module"] = nullptr;
  nlohmann::json construction{{"base", k.construction_base}};
  for (int i = 0; i < k.spins; ++i) construction = nlohmann::json{{"spin", construction}};
  j["construction"] = construction;
  j["provenance"] = k.provenance;
  return j;
}

KnotDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("descriptor document must be a JSON object");
  if (!j.contains("schema_version") || j.at("schema_version") != 1)
    throw ParseError("unsupported descriptor schema version");
  KnotDescriptor k;
  try {
    k.name = j.at("name").get<std::string>();
    k.n = j.at("n").get<int>();
    underlying_from_json(j.at("underlying").get<std::string>(), k);
    k.mu = j.at("mu").get<int>();
    k.singular_kind = singular_kind_from_json(j.at("singular_kind").get<std::string>());
    if (!j.at("seifert").is_null()) {
      const auto& js = j.at("seifert");
      const auto& rows = js.at("matrix");
      IntMatrix m(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ParseError("Seifert matrix must be square");
        for (std::size_t c = 0; c < rows.size(); ++c) m.at(i, c) = bigint_from_json(rows[i][c]);
      }
      k.seifert = SeifertMatrix::validate(std::move(m), js.at("q").get<int>());
    }
    if (!j.at("module").is_null())
      k.module_h3 =
          ModulePresentation(LaurentMatrix::parse(j.at("module").at("presentation").get<std::string>()));
    nlohmann::json node = j.at("construction");
    int spins = 0;
    while (node.is_object() && node.contains("spin")) {
      node = node.at("spin");
      ++spins;
    }
    if (!node.is_object() || !node.contains("base"))
      throw ParseError("construction tree must terminate in a base node");
    k.construction_base = node.at("base").get<std::string>();
    k.spins = spins;
    k.provenance = j.at("provenance").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed descriptor document: ") + e.what());
  }
  check_descriptor(k);
  return k;
}

}  // namespace knotcert

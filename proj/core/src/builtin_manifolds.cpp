#include "supersdet/manifold.hpp"

#include <nlohmann/json.hpp>

namespace supersdet {

namespace {

struct Builtin {
  const char* name;
  const char* provenance;
  const char* document;
};

// Ring models with total Pontryagin class p = (1 + h^2)^{m+1} for CP^m and
// (1 + u)^6 / (1 + 4u) for HP^2.
constexpr Builtin kBuiltins[] = {
    {"cp2", "c(CP2) = (1+h)^3, p = (1+h^2)^3 truncated: p1 = 3h^2",
     R"({"name": "cp2", "dimension": 4, "kind": "cohomology_model", "signature": 1,
         "basis": [{"name": "1", "degree": 0}, {"name": "h", "degree": 2}, {"name": "h2", "degree": 4}],
         "products": [{"left": "h", "right": "h", "result": [{"basis": "h2", "coeff": 1}]}],
         "fundamental": "h2",
         "pontryagin_classes": {"p1": [{"basis": "h2", "coeff": 3}]}})"},
    {"cp4", "c(CP4) = (1+h)^5, p = (1+h^2)^5: p1 = 5h^2, p2 = 10h^4",
     R"({"name": "cp4", "dimension": 8, "kind": "cohomology_model", "signature": 1,
         "basis": [{"name": "1", "degree": 0}, {"name": "h", "degree": 2}, {"name": "h2", "degree": 4},
                   {"name": "h3", "degree": 6}, {"name": "h4", "degree": 8}],
         "products": [{"left": "h", "right": "h", "result": [{"basis": "h2", "coeff": 1}]},
                      {"left": "h", "right": "h2", "result": [{"basis": "h3", "coeff": 1}]},
                      {"left": "h", "right": "h3", "result": [{"basis": "h4", "coeff": 1}]},
                      {"left": "h2", "right": "h2", "result": [{"basis": "h4", "coeff": 1}]}],
         "fundamental": "h4",
         "pontryagin_classes": {"p1": [{"basis": "h2", "coeff": 5}], "p2": [{"basis": "h4", "coeff": 10}]}})"},
    {"hp2", "p(HP2) = (1+u)^6 (1+4u)^{-1} = 1 + 2u + 7u^2, u^2[HP2] = 1",
     R"({"name": "hp2", "dimension": 8, "kind": "cohomology_model", "signature": 1,
         "basis": [{"name": "1", "degree": 0}, {"name": "u", "degree": 4}, {"name": "u2", "degree": 8}],
         "products": [{"left": "u", "right": "u", "result": [{"basis": "u2", "coeff": 1}]}],
         "fundamental": "u2",
         "pontryagin_classes": {"p1": [{"basis": "u", "coeff": 2}], "p2": [{"basis": "u2", "coeff": 7}]}})"},
    {"k3", "c1 = 0, c2 = 24: p1 = c1^2 - 2c2 = -48; signature from b+ = 3, b- = 19",
     R"({"name": "k3", "dimension": 4, "kind": "pontryagin_numbers", "signature": -16,
         "pontryagin_numbers": {"p1": -48}})"},
};

}  // namespace

std::vector<std::string> builtin_manifold_names() { return {"cp2", "cp4", "hp2", "k3", "cp2xcp2", "k3xcp2"}; }

Manifold builtin_manifold(const std::string& name) {
  for (const auto& b : kBuiltins) {
    if (name == b.name) return load_manifold(nlohmann::json::parse(b.document));
  }
  if (name == "cp2xcp2") {
    auto cp2 = std::get<CohomologyModel>(builtin_manifold("cp2"));
    return product_model(cp2, cp2);
  }
  if (name == "k3xcp2") {
    return product_manifold(pontryagin_data(builtin_manifold("k3")), pontryagin_data(builtin_manifold("cp2")));
  }
  throw std::invalid_argument("unknown builtin manifold '" + name + "'");
}

std::string builtin_provenance(const std::string& name) {
  for (const auto& b : kBuiltins) {
    if (name == b.name) return b.provenance;
  }
  if (name == "cp2xcp2") return "Kunneth ring of cp2 x cp2, p(MxN) = p(M) p(N)";
  if (name == "k3xcp2") return "Whitney product of k3 and cp2 Pontryagin numbers";
  throw std::invalid_argument("unknown builtin manifold '" + name + "'");
}

}  // namespace supersdet

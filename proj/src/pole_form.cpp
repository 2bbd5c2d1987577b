#include "hurwitz/pole_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hurwitz {

Rational PoleForm::coeff(const PoleIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PoleForm::add(const PoleIndex& a, const Rational& c) {
  if (static_cast<int>(a.size()) != arity_) {
    throw std::invalid_argument("PoleForm::add: multi-index has " + std::to_string(a.size()) +
                                " entries, form has arity " + std::to_string(arity_));
  }
  if (std::any_of(a.begin(), a.end(), [](int x) { return x < 1; })) {
    throw std::invalid_argument("PoleForm::add: pole orders must be >= 1");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PoleForm::max_pole_order() const {
  int m = 0;
  for (const auto& [a, c] : terms_) {
    for (int x : a) m = std::max(m, x);
  }
  return m;
}

PoleForm PoleForm::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw std::invalid_argument("PoleForm::permuted: wrong arity");
  PoleForm out(arity_);
  PoleIndex b(perm.size());
  for (const auto& [a, c] : terms_) {
    for (std::size_t i = 0; i < perm.size(); ++i) b[i] = a[static_cast<std::size_t>(perm[i])];
    out.terms_.emplace(b, c);
  }
  return out;
}

bool PoleForm::is_symmetric() const {
  for (const auto& [a, c] : terms_) {
    PoleIndex b = a;
    std::sort(b.begin(), b.end());
    do {
      auto it = terms_.find(b);
      if (it == terms_.end() || it->second != c) return false;
    } while (std::next_permutation(b.begin(), b.end()));
  }
  return true;
}

bool PoleForm::is_residue_free() const {
  // Distinct multi-indices are linearly independent, so the residue in z_i with the other
  // variables held fixed is the single coefficient with a_i = 1.
  return std::none_of(terms_.begin(), terms_.end(), [](const auto& term) {
    return std::find(term.first.begin(), term.first.end(), 1) != term.first.end();
  });
}

nlohmann::ordered_json PoleForm::to_json(int g) const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [a, c] : terms_) {
    nlohmann::ordered_json t;
    t["a"] = a;
    t["c"] = to_string(c);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json j;
  j["g"] = g;
  j["k"] = arity_;
  j["terms"] = std::move(terms);
  return j;
}

PoleForm PoleForm::from_json(const nlohmann::ordered_json& j, int* g) {
  PoleForm form(j.at("k").get<int>());
  if (g != nullptr) *g = j.at("g").get<int>();
  for (const auto& t : j.at("terms")) {
    form.add(t.at("a").get<PoleIndex>(), parse_rational(t.at("c").get<std::string>()));
  }
  return form;
}

}  // namespace hurwitz

#include "hurwitz/cache.hpp"

#include <fstream>
#include <stdexcept>

namespace hurwitz {

bool CacheFile::load() {
  entries_.clear();
  message_.clear();
  std::ifstream in(path_);
  if (!in) {
    message_ = "no cache at " + path_.string();
    return false;
  }
  std::vector<Entry> parsed;
  try {
    const auto j = nlohmann::ordered_json::parse(in);
    if (!j.is_object() || j.value("version", std::string()) != kVersion) {
      message_ = "cache version mismatch, ignoring " + path_.string();
      return false;
    }
    for (const auto& e : j.at("entries")) {
      int g = 0;
      PoleForm form = PoleForm::from_json(e.at("form"), &g);
      Entry entry{e.at("g").get<int>(), e.at("k").get<int>(), e.at("trunc_order").get<int>(),
                  e.at("fingerprint").get<std::string>(), std::move(form)};
      if (entry.g != g || entry.k != entry.form.arity()) throw std::invalid_argument("inconsistent entry");
      parsed.push_back(std::move(entry));
    }
  } catch (const std::exception& ex) {
    message_ = "unreadable cache " + path_.string() + ": " + ex.what();
    return false;
  }
  entries_ = std::move(parsed);
  message_ = "loaded " + std::to_string(entries_.size()) + " cache entries from " + path_.string();
  return true;
}

int CacheFile::apply(TopologicalRecursion& tr) const {
  const std::string fp = tr.curve().fingerprint();
  int used = 0;
  for (const Entry& e : entries_) {
    if (e.fingerprint != fp || e.trunc_order != tr.curve().order()) continue;
    if (!TopologicalRecursion::is_stable(e.g, e.k)) continue;
    tr.preload(e.g, e.k, e.form);
    ++used;
  }
  return used;
}

void CacheFile::absorb(const TopologicalRecursion& tr) {
  const std::string fp = tr.curve().fingerprint();
  const int order = tr.curve().order();
  std::erase_if(entries_, [&](const Entry& e) { return e.fingerprint == fp && e.trunc_order == order; });
  for (const auto& [gk, form] : tr.memo()) entries_.push_back({gk.first, gk.second, order, fp, form});
}

void CacheFile::save() const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Entry& e : entries_) {
    nlohmann::ordered_json item;
    item["g"] = e.g;
    item["k"] = e.k;
    item["trunc_order"] = e.trunc_order;
    item["fingerprint"] = e.fingerprint;
    item["form"] = e.form.to_json(e.g);
    list.push_back(std::move(item));
  }
  j["entries"] = std::move(list);
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace hurwitz

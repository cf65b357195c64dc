#include "mcluster/cli/enumerate.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <functional>

#include "mcluster/algebra/presentation.hpp"
#include "mcluster/algebra/presentation_io.hpp"
#include "mcluster/cluster/cluster_category.hpp"
#include "mcluster/derived/derived_io.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), hash, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", hash[i]);
    out += buf;
  }
  return out;
}

EnumerationReport enumerate_tilting(const rep::Orientation& o, int m, const EnumerationLimits& limits) {
  if (o.n() < 1 || o.n() > limits.max_n)
    throw PreconditionError("enumerate: n = " + std::to_string(o.n()) + " exceeds the limit " + std::to_string(limits.max_n));
  if (m < 1 || m > limits.max_m)
    throw PreconditionError("enumerate: m = " + std::to_string(m) + " outside 1.." + std::to_string(limits.max_m));

  const derived::DerivedCategory& cat = derived::category_for(o);
  std::vector<derived::DerivedObject> domain;
  for (int r = 0; r <= m; ++r)
    for (const auto& iv : rep::all_intervals(o.n())) {
      derived::DerivedObject x{r, iv};
      if (cat.in_fundamental_domain(x, m)) domain.push_back(x);
    }

  const std::size_t total = domain.size();
  auto ext_free = [&](const derived::DerivedObject& x, const derived::DerivedObject& y) {
    for (int j = 1; j <= m; ++j)
      if (cluster::cluster_hom(cat, x, cat.shift(y, j), m).dim() != 0) return false;
    return true;
  };
  std::vector<std::vector<bool>> compatible(total, std::vector<bool>(total));
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) compatible[a][b] = ext_free(domain[a], domain[b]);

  EnumerationReport report;
  report.n = o.n();
  report.m = m;
  report.orientation = o;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == o.n()) {
      EnumeratedObject e;
      e.object = derived::DerivedSum{o, {}};
      for (std::size_t k : chosen) e.object.summands.push_back(domain[k]);
      e.object = derived::sorted(e.object);
      auto cert = cluster::is_m_cluster_tilting(e.object, m);
      if (!cert.cluster_tilting) throw InternalError("enumerate: " + derived::emit(e.object) + " is not m-cluster tilting");
      e.presentation = algebra::present(cluster::orbit_endo_algebra(e.object, m).algebra);
      e.digest = sha256_hex(algebra::emit(algebra::canonical_form(e.presentation), "json"));
      e.gentle = algebra::is_gentle_with_cycles(e.presentation, static_cast<std::size_t>(m));
      report.gentle_count += e.gentle.gentle;
      report.cycle_compliant_count += e.gentle.gentle && e.gentle.cycle_compliant;
      report.objects.push_back(std::move(e));
      return;
    }
    for (std::size_t k = start; k < total; ++k) {
      if (!compatible[k][k]) continue;
      bool ok = true;
      for (std::size_t c : chosen)
        if (!compatible[k][c] || !compatible[c][k]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(k);
      extend(k + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return report;
}

nlohmann::ordered_json to_json(const EnumerationReport& r) {
  nlohmann::ordered_json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["orientation"] = r.orientation.word();
  out["count"] = r.count();
  out["gentle"] = r.gentle_count;
  out["cycle_compliant"] = r.cycle_compliant_count;
  out["objects"] = nlohmann::ordered_json::array();
  for (const auto& e : r.objects) {
    nlohmann::ordered_json item;
    item["summands"] = derived::to_json(e.object)["summands"];
    item["digest"] = e.digest;
    item["vertices"] = e.presentation.quiver.num_vertices();
    item["arrows"] = e.presentation.quiver.num_arrows();
    item["relations"] = e.presentation.relations.size();
    item["gentle"] = e.gentle.gentle;
    item["cycles"] = e.gentle.cycles.size();
    item["cycle_compliant"] = e.gentle.cycle_compliant;
    out["objects"].push_back(item);
  }
  return out;
}

}  // namespace mcluster::cli

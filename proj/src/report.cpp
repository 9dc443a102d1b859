#include "fj/report.hpp"

#include <sstream>

#include "fj/error.hpp"

namespace fj {

nlohmann::json spectrum_to_json(const SpectrumReport& s) {
  auto out = nlohmann::json::array();
  for (const auto& p : s.pairs) out.push_back({p.eigenvalue, p.multiplicity});
  return out;
}

SpectrumReport spectrum_from_json(const nlohmann::json& j) {
  std::vector<SpectrumEntry> pairs;
  for (const auto& p : j) pairs.push_back({p.at(0).get<long>(), p.at(1).get<std::size_t>()});
  return normalize_spectrum(std::move(pairs));
}

nlohmann::json RunReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["family"] = family;
  j["params"] = params;
  j["class_size"] = class_size;
  j["connected"] = connected;
  if (spectrum) {
    j["spectrum"] = spectrum_to_json(*spectrum);
    if (spectrum->unaccounted_mass) j["spectrum_unaccounted"] = spectrum->unaccounted_mass;
  }
  if (radical_dim) j["radical_dim"] = *radical_dim;
  if (radical_dim_spectrum) j["radical_dim_spectrum"] = *radical_dim_spectrum;
  if (quotient_dim) j["quotient_dim"] = *quotient_dim;
  if (jordan) {
    nlohmann::json jj;
    jj["verdict"] = *jordan;
    if (counterexample) {
      jj["counterexample"] = {{"indices", counterexample->indices}, {"labels", counterexample->labels}};
    } else {
      jj["counterexample"] = nullptr;
    }
    if (eta_case) jj["case"] = *eta_case;
    if (quadruples_checked) jj["quadruples_checked"] = *quadruples_checked;
    j["jordan"] = jj;
  }
  if (expected_spectrum || match) {
    nlohmann::json o;
    if (expected_row) o["row"] = *expected_row;
    if (expected_spectrum) o["expected_spectrum"] = spectrum_to_json(*expected_spectrum);
    if (match) o["match"] = *match;
    j["oracle"] = o;
  }
  if (with_timing) j["timing"] = seconds;
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.family = j.at("family").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.class_size = j.at("class_size").get<std::size_t>();
    r.connected = j.at("connected").get<bool>();
    if (j.contains("spectrum")) {
      r.spectrum = spectrum_from_json(j["spectrum"]);
      if (j.contains("spectrum_unaccounted")) r.spectrum->unaccounted_mass = j["spectrum_unaccounted"];
    }
    if (j.contains("radical_dim")) r.radical_dim = j["radical_dim"].get<std::size_t>();
    if (j.contains("radical_dim_spectrum")) r.radical_dim_spectrum = j["radical_dim_spectrum"].get<std::size_t>();
    if (j.contains("quotient_dim")) r.quotient_dim = j["quotient_dim"].get<std::size_t>();
    if (j.contains("jordan")) {
      const auto& jj = j["jordan"];
      r.jordan = jj.at("verdict").get<bool>();
      if (jj.contains("counterexample") && !jj["counterexample"].is_null()) {
        Counterexample c;
        c.indices = jj["counterexample"].at("indices").get<std::array<std::size_t, 4>>();
        c.labels = jj["counterexample"].at("labels").get<std::array<std::string, 4>>();
        r.counterexample = c;
      }
      if (jj.contains("case")) r.eta_case = jj["case"].get<std::string>();
      if (jj.contains("quadruples_checked")) r.quadruples_checked = jj["quadruples_checked"].get<std::uint64_t>();
    }
    if (j.contains("oracle")) {
      const auto& o = j["oracle"];
      if (o.contains("row")) r.expected_row = o["row"].get<std::string>();
      if (o.contains("expected_spectrum")) r.expected_spectrum = spectrum_from_json(o["expected_spectrum"]);
      if (o.contains("match")) r.match = o["match"].get<bool>();
    }
    if (j.contains("timing")) r.seconds = j["timing"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
}

bool operator==(const RunReport& a, const RunReport& b) {
  return a.to_json(false) == b.to_json(false);
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "family: " << family;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  os << "\nclass size: " << class_size << "\nconnected: " << (connected ? "yes" : "no") << "\n";
  if (spectrum) os << "spectrum: " << spectrum->to_string() << "\n";
  if (expected_spectrum) {
    os << "expected: " << expected_spectrum->to_string();
    if (expected_row) os << " (" << *expected_row << ")";
    os << "\n";
  }
  if (match) os << "match: " << (*match ? "yes" : "NO") << "\n";
  if (radical_dim) {
    os << "radical dim: " << *radical_dim;
    if (radical_dim_spectrum) os << " (-4 multiplicity " << *radical_dim_spectrum << ")";
    os << "\n";
  }
  if (quotient_dim) os << "quotient dim: " << *quotient_dim << "\n";
  if (jordan) {
    os << "jordan: " << (*jordan ? "true" : "false");
    if (eta_case) os << " (" << *eta_case << ")";
    os << "\n";
    if (counterexample) {
      const auto& c = *counterexample;
      os << "counterexample: x=" << c.labels[0] << " y=" << c.labels[1] << " z=" << c.labels[2]
         << " w=" << c.labels[3] << "\n";
    }
    if (quadruples_checked) os << "quadruples checked: " << *quadruples_checked << "\n";
  }
  return os.str();
}

std::string csv_header() {
  return "family,params,class_size,connected,spectrum,radical_dim,quotient_dim,jordan,match";
}

std::string csv_row(const RunReport& r) {
  std::ostringstream os;
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ";";
    params += k + "=" + v;
  }
  auto opt = [](const auto& o) {
    std::ostringstream s;
    if (o) s << *o;
    return s.str();
  };
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
  os << r.family << "," << params << "," << r.class_size << "," << (r.connected ? "true" : "false") << ","
     << "\"" << (r.spectrum ? r.spectrum->to_string() : "") << "\"," << opt(r.radical_dim) << ","
     << opt(r.quotient_dim) << "," << flag(r.jordan) << "," << flag(r.match);
  return os.str();
}

}  // namespace fj

#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "gates.hpp"
#include "lattice.hpp"
#include "protocol.hpp"
#include "schedule.hpp"
#include "statevector.hpp"

namespace clusterforge {

// ---- deterministic emission ----
// Outputs are built by hand with fixed key order and %.17g doubles, so a
// given value always serializes to identical bytes.

inline std::string json_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

inline void append_site_json(std::string& out, const Site& s) {
  out += '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += ']';
}

inline std::string write_state_json(const StateVector& sv) {
  std::string out = "{\"num_qubits\":" + std::to_string(sv.num_qubits()) +
                    ",\"amplitudes\":[";
  for (std::uint64_t i = 0; i < sv.size(); ++i) {
    if (i) out += ',';
    const cplx& a = sv.amplitudes()[i];
    out += '[';
    out += json_double(a.real());
    out += ',';
    out += json_double(a.imag());
    out += ']';
  }
  out += "]}";
  return out;
}

// Raw little-endian IEEE doubles, interleaved re,im per amplitude, in
// index order. No header: the length fixes the qubit count.
inline std::string write_state_binary(const StateVector& sv) {
  std::string out(sv.size() * 2 * sizeof(double), '\0');
  char* p = out.data();
  for (std::uint64_t i = 0; i < sv.size(); ++i) {
    const double re = sv.amplitudes()[i].real();
    const double im = sv.amplitudes()[i].imag();
    std::memcpy(p, &re, sizeof(double));
    p += sizeof(double);
    std::memcpy(p, &im, sizeof(double));
    p += sizeof(double);
  }
  return out;
}

inline std::string write_cluster_json(const Cluster& c,
                                      const std::vector<int>& kappa = {}) {
  std::string out = "{\"dimension\":" + std::to_string(c.dimension()) +
                    ",\"sites\":[";
  for (std::size_t i = 0; i < c.sites().size(); ++i) {
    if (i) out += ',';
    append_site_json(out, c.sites()[i]);
  }
  out += ']';
  if (!kappa.empty()) {
    out += ",\"kappa\":[";
    for (std::size_t i = 0; i < kappa.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(kappa[i]);
    }
    out += ']';
  }
  out += '}';
  return out;
}

inline std::string write_schedule_json(const Schedule& s) {
  std::string out = "{\"steps\":[";
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (i) out += ',';
    out += "{\"edges\":[";
    for (std::size_t j = 0; j < s.steps[i].edges.size(); ++j) {
      if (j) out += ',';
      out += '[';
      append_site_json(out, s.steps[i].edges[j].a);
      out += ',';
      append_site_json(out, s.steps[i].edges[j].b);
      out += ']';
    }
    out += "]}";
  }
  out += "]}";
  return out;
}

inline std::string write_verification_json(const VerificationReport& r) {
  std::string out = "{\"sites\":[";
  for (std::size_t i = 0; i < r.sites.size(); ++i) {
    if (i) out += ',';
    out += "{\"site\":";
    append_site_json(out, r.sites[i].site);
    out += ",\"kappa\":" + std::to_string(r.sites[i].kappa);
    out += ",\"expectation\":" + json_double(r.sites[i].expectation);
    out += '}';
  }
  out += "],\"pass\":";
  out += r.pass ? "true" : "false";
  out += ",\"max_deviation\":" + json_double(r.max_deviation);
  out += '}';
  return out;
}

// Build metadata; the state goes inline unless a separate file path is
// recorded instead.
inline std::string write_build_json(const BuildResult& b,
                                    const std::optional<std::string>& state_file = {}) {
  std::string out = "{\"model\":\"";
  out += model_name(b.model);
  out += "\",\"num_qubits\":" + std::to_string(b.state.num_qubits());
  out += ",\"schedule_used\":" + write_schedule_json(b.schedule_used);
  out += ",\"corrections_applied\":[";
  for (std::size_t i = 0; i < b.corrections_applied.size(); ++i) {
    if (i) out += ',';
    out += "{\"qubit\":" + std::to_string(b.corrections_applied[i].qubit);
    out += ",\"angle\":" + json_double(b.corrections_applied[i].angle);
    out += '}';
  }
  out += ']';
  if (state_file)
    out += ",\"state_file\":" + json_escape(*state_file);
  else
    out += ",\"state\":" + write_state_json(b.state);
  out += '}';
  return out;
}

inline std::string write_compare_json(const CompareReport& r) {
  std::string out = "{\"overlaps\":[";
  for (std::size_t i = 0; i < r.overlaps.size(); ++i) {
    if (i) out += ',';
    out += "{\"a\":\"";
    out += model_name(r.overlaps[i].a);
    out += "\",\"b\":\"";
    out += model_name(r.overlaps[i].b);
    out += "\",\"overlap\":" + json_double(r.overlaps[i].overlap);
    out += '}';
  }
  out += "],\"verifications\":[";
  for (std::size_t i = 0; i < r.verifications.size(); ++i) {
    if (i) out += ',';
    out += "{\"model\":\"";
    out += model_name(r.verifications[i].first);
    out += "\",\"report\":" + write_verification_json(r.verifications[i].second);
    out += '}';
  }
  out += "],\"pass\":";
  out += r.pass ? "true" : "false";
  out += '}';
  return out;
}

inline std::string write_identity_check_json(const IdentityCheck& c) {
  std::string out = "{\"identity\":" + json_escape(c.identity);
  out += ",\"distance\":" + json_double(c.distance);
  out += ",\"pass\":";
  out += c.pass ? "true" : "false";
  out += '}';
  return out;
}

// ---- parsing ----
// Inputs go through nlohmann::json; errors carry the offending field name.

namespace detail {

inline nlohmann::json parse_or_throw(const std::string& text, const char* what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ValidationError(std::string(what) + " is not valid JSON");
  return j;
}

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw ValidationError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace detail

struct ParsedCluster {
  Cluster cluster;
  std::vector<int> kappa;  // qubit order; empty when absent from the input
};

// Accepts {"dimension": d, "sites": [[..], ...], "kappa": [...]} with kappa
// optional and aligned with the sites as given; the result's kappa follows
// the cluster's lexicographic qubit order.
inline ParsedCluster parse_cluster_json(const std::string& text) {
  const nlohmann::json j = detail::parse_or_throw(text, "cluster file");
  if (!j.is_object()) throw ValidationError("cluster file must be a JSON object");
  const auto& dim = detail::require_field(j, "dimension");
  if (!dim.is_number_integer())
    throw ValidationError("field \"dimension\" must be an integer");
  const auto& sites_j = detail::require_field(j, "sites");
  if (!sites_j.is_array())
    throw ValidationError("field \"sites\" must be an array");
  std::vector<Site> sites;
  for (const auto& s : sites_j) {
    if (!s.is_array())
      throw ValidationError("field \"sites\" entries must be coordinate arrays");
    Site site;
    for (const auto& x : s) {
      if (!x.is_number_integer())
        throw ValidationError("field \"sites\" coordinates must be integers");
      site.push_back(x.get<int>());
    }
    sites.push_back(std::move(site));
  }
  std::vector<int> kappa_in;
  if (j.contains("kappa")) {
    const auto& kj = j["kappa"];
    if (!kj.is_array())
      throw ValidationError("field \"kappa\" must be an array");
    for (const auto& k : kj) {
      if (!k.is_number_integer() || (k.get<int>() != 0 && k.get<int>() != 1))
        throw ValidationError("field \"kappa\" entries must be 0 or 1");
      kappa_in.push_back(k.get<int>());
    }
    if (kappa_in.size() != sites.size())
      throw ValidationError("field \"kappa\" must have one entry per site");
  }
  Cluster cluster(dim.get<int>(), sites);
  std::vector<int> kappa;
  if (!kappa_in.empty()) {
    kappa.assign(sites.size(), 0);
    for (std::size_t i = 0; i < sites.size(); ++i)
      kappa[cluster.qubit_index(sites[i])] = kappa_in[i];
  }
  return {std::move(cluster), std::move(kappa)};
}

inline StateVector parse_state_json(const std::string& text,
                                    bool renormalize = false,
                                    int max_qubits = kDefaultMaxQubits) {
  const nlohmann::json j = detail::parse_or_throw(text, "state file");
  if (!j.is_object()) throw ValidationError("state file must be a JSON object");
  const auto& n = detail::require_field(j, "num_qubits");
  if (!n.is_number_integer())
    throw ValidationError("field \"num_qubits\" must be an integer");
  const auto& amps_j = detail::require_field(j, "amplitudes");
  if (!amps_j.is_array())
    throw ValidationError("field \"amplitudes\" must be an array");
  std::vector<cplx> amps;
  amps.reserve(amps_j.size());
  for (const auto& a : amps_j) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      throw ValidationError(
          "field \"amplitudes\" entries must be [real, imag] pairs");
    amps.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  return StateVector::from_amplitudes(n.get<int>(), std::move(amps), renormalize,
                                      max_qubits);
}

// Binary layout mirrors write_state_binary; the qubit count is inferred
// from the byte length, which must be 16 * 2^n.
inline StateVector parse_state_binary(const std::string& bytes,
                                      bool renormalize = false,
                                      int max_qubits = kDefaultMaxQubits) {
  if (bytes.size() % 16 != 0)
    throw ValidationError("binary state length must be a multiple of 16 bytes");
  const std::uint64_t count = bytes.size() / 16;
  if (count == 0 || (count & (count - 1)) != 0)
    throw ValidationError("binary state must hold 2^n amplitudes, got " +
                          std::to_string(count));
  int n = 0;
  while ((std::uint64_t{1} << n) < count) ++n;
  std::vector<cplx> amps(count);
  const char* p = bytes.data();
  for (auto& a : amps) {
    double re, im;
    std::memcpy(&re, p, sizeof(double));
    p += sizeof(double);
    std::memcpy(&im, p, sizeof(double));
    p += sizeof(double);
    a = {re, im};
  }
  return StateVector::from_amplitudes(n, std::move(amps), renormalize, max_qubits);
}

// Accepts either a bare array of 0/1 or {"kappa": [...]}; entries follow
// the cluster's qubit order.
inline std::vector<int> parse_kappa_json(const std::string& text) {
  const nlohmann::json j = detail::parse_or_throw(text, "kappa file");
  const nlohmann::json* arr = &j;
  if (j.is_object()) arr = &detail::require_field(j, "kappa");
  if (!arr->is_array())
    throw ValidationError("kappa file must hold an array of 0/1");
  std::vector<int> out;
  for (const auto& k : *arr) {
    if (!k.is_number_integer() || (k.get<int>() != 0 && k.get<int>() != 1))
      throw ValidationError("field \"kappa\" entries must be 0 or 1");
    out.push_back(k.get<int>());
  }
  return out;
}

}  // namespace clusterforge

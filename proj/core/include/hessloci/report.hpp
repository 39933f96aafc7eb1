/*
 * Copyright 2026 The hessloci authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file report.hpp
 * @brief JSON serialization of certificates and reports (schema
 *        "hessloci-report/1"). Polynomials are always emitted in the text
 *        grammar so reports diff cleanly; keys are sorted by construction,
 *        so a fixed seed reproduces a byte-identical report body.
 */

#ifndef HESSLOCI_REPORT_HPP
#define HESSLOCI_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hessloci/graded.hpp"
#include "hessloci/poly_io.hpp"
#include "hessloci/projective.hpp"
#include "hessloci/reconstruct.hpp"
#include "hessloci/strata.hpp"

namespace hessloci {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "hessloci-report/1";

/// FNV-1a over a string; used as the certificate verification hash.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <class K>
json scalar_json(const K& x) {
  return k_str(x);
}

template <class K>
json poly_json(const MultiPoly<K>& p) {
  return poly_print(p);
}

template <class K>
json point_json(const ProjPoint<K>& p) {
  json a = json::array();
  for (const K& c : p.coords()) a.push_back(k_str(c));
  return a;
}

template <class K>
json space_json(const LinearSpace<K>& s) {
  json j;
  j["dim"] = s.dim();
  json basis = json::array();
  for (const auto& p : s.basis()) basis.push_back(point_json(p));
  j["basis"] = basis;
  json forms = json::array();
  for (const auto& f : s.cutting_forms()) forms.push_back(poly_print(f));
  j["cutting_forms"] = forms;
  return j;
}

template <class K>
json certificate_json(const MembershipCertificate<K>& c) {
  json j;
  j["target"] = poly_print(c.target);
  j["degree"] = c.degree;
  j["member"] = c.member;
  std::string hashed = poly_print(c.target);
  if (c.member) {
    json cof = json::array();
    for (const auto& p : c.cofactors) {
      cof.push_back(poly_print(p));
      hashed += "|" + poly_print(p);
    }
    j["cofactors"] = cof;
  } else {
    json w = json::array();
    for (const auto& x : c.witness) {
      w.push_back(k_str(x));
      hashed += "|" + k_str(x);
    }
    j["witness"] = w;
  }
  j["verification_hash"] = fnv1a(hashed);
  return j;
}

inline json strata_json(const StrataReport& r) {
  json j;
  j["prime"] = r.prime;
  j["k"] = r.k;
  j["mode"] = r.full ? "full" : "sample";
  j["seed"] = r.seed;
  if (!r.full) j["trials"] = r.trials;
  j["scanned"] = r.scanned;
  j["count"] = r.count;
  j["truncated"] = r.truncated;
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(p);
  j["points"] = pts;
  j["note"] = "F_p counts are lower bounds on geometric point sets";
  return j;
}

// ---------------------------------------------------------------------------
// Third-tensor file format: (n+1)^3 entries, rationals as "p/q" strings,
// with a symmetry-checked loader.
// ---------------------------------------------------------------------------

inline json tensor_json(const ThirdTensor<Rat>& t) {
  json entries = json::array();
  for (int i = 0; i < t.nvars(); ++i) {
    json plane = json::array();
    for (int j = 0; j < t.nvars(); ++j) {
      json row = json::array();
      for (int k = 0; k < t.nvars(); ++k) row.push_back(t.at(i, j, k).get_str());
      plane.push_back(row);
    }
    entries.push_back(plane);
  }
  json j;
  j["nvars"] = t.nvars();
  j["entries"] = entries;
  return j;
}

inline ThirdTensor<Rat> tensor_from_json(const json& j) {
  if (!j.contains("nvars") || !j.contains("entries"))
    throw DomainError("tensor file needs 'nvars' and 'entries'");
  const int nv = j.at("nvars").get<int>();
  ThirdTensor<Rat> t(nv, Rat(0));
  const json& e = j.at("entries");
  if (static_cast<int>(e.size()) != nv) throw DomainError("tensor entries have wrong shape");
  for (int i = 0; i < nv; ++i) {
    if (static_cast<int>(e[static_cast<std::size_t>(i)].size()) != nv)
      throw DomainError("tensor entries have wrong shape");
    for (int jj = 0; jj < nv; ++jj) {
      const json& row = e[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
      if (static_cast<int>(row.size()) != nv)
        throw DomainError("tensor entries have wrong shape");
      for (int k = 0; k < nv; ++k) {
        const json& cell = row[static_cast<std::size_t>(k)];
        t.at(i, jj, k) = cell.is_number_integer()
                             ? Rat(static_cast<long>(cell.get<long long>()))
                             : rat_from_string(cell.get<std::string>());
      }
    }
  }
  if (!t.symmetric())
    throw DomainError("tensor file is not symmetric under index permutations");
  return t;
}

inline json dimension_json(const DimensionEstimate& e) {
  json j;
  j["dim"] = e.dim;
  j["agreed"] = e.agreed;
  j["dim_p1"] = e.dim_p1;
  j["dim_p2"] = e.dim_p2;
  j["ratio_exponent"] = e.ratio_exponent;
  j["residual"] = e.residual;
  j["low_confidence"] = e.low_confidence;
  j["empty_over_tested_fields"] = e.empty_over_tested;
  j["inconsistent"] = e.inconsistent;
  j["lifted_zero_dimensional"] = e.lifted_zero_dimensional;
  j["primes"] = {e.p1, e.p2};
  j["counts"] = {e.count1, e.count2};
  return j;
}

}  // namespace hessloci

#endif  // HESSLOCI_REPORT_HPP

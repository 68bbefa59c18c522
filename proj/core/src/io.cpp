// Copyright 2026 The simdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simdense/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace simdense::io {

json matrix_to_json(const CMatrix& m, const Labels& labels) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"labels", labels}, {"shape", {m.rows(), m.cols()}}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const StateVector& state) { return matrix_to_json(state.amplitudes(), state.labels()); }

json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.entries(), rho.labels()); }

json to_json(const Unitary& u) { return matrix_to_json(u.entries(), {}); }

Labels labels_from_json(const json& j) {
  if (!j.contains("labels")) return {};
  return j.at("labels").get<Labels>();
}

CMatrix matrix_from_json(const json& j) {
  try {
    const auto shape = j.at("shape").get<std::vector<long>>();
    if (shape.size() != 2 || shape[0] <= 0 || shape[1] <= 0) throw InvariantError("shape must be [rows, cols]");
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (re.size() != static_cast<std::size_t>(shape[0]) || im.size() != static_cast<std::size_t>(shape[0])) {
      throw InvariantError("re/im row count does not match shape");
    }
    CMatrix m(shape[0], shape[1]);
    for (long r = 0; r < shape[0]; ++r) {
      const auto& re_row = re.at(static_cast<std::size_t>(r));
      const auto& im_row = im.at(static_cast<std::size_t>(r));
      if (re_row.size() != static_cast<std::size_t>(shape[1]) || im_row.size() != static_cast<std::size_t>(shape[1])) {
        throw InvariantError("re/im column count does not match shape");
      }
      for (long c = 0; c < shape[1]; ++c) {
        m(r, c) = Complex(re_row.at(static_cast<std::size_t>(c)).get<double>(),
                          im_row.at(static_cast<std::size_t>(c)).get<double>());
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw InvariantError(std::string("malformed matrix JSON: ") + e.what());
  }
}

Unitary unitary_from_json(const json& j) { return Unitary(matrix_from_json(j)); }

StateVector state_from_json(const json& j) {
  const CMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw InvariantError("a state vector has shape [2^n, 1]");
  return StateVector(labels_from_json(j), m.col(0));
}

std::vector<StateVector> payloads_from_json(const json& j, std::vector<std::string>& warnings) {
  if (!j.is_array()) throw InvariantError("payload file must hold a JSON array");
  std::vector<StateVector> out;
  try {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const json& pair = j.at(i);
      if (!pair.is_array() || pair.size() != 2) throw InvariantError("each payload is a pair of amplitudes");
      CVector v(2);
      for (std::size_t k = 0; k < 2; ++k) {
        v(static_cast<Eigen::Index>(k)) = Complex(pair.at(k).at("re").get<double>(), pair.at(k).at("im").get<double>());
      }
      const double norm = v.norm();
      if (std::abs(norm - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "payload " << i << " renormalized (norm was " << norm << ")";
        warnings.push_back(msg.str());
      }
      out.push_back(StateVector::normalized({"q"}, v));
    }
  } catch (const json::exception& e) {
    throw InvariantError(std::string("malformed payload JSON: ") + e.what());
  }
  return out;
}

namespace {

json bits_json(EncodedBits b) { return json::array({b.x ? 1 : 0, b.y ? 1 : 0}); }

}  // namespace

json to_json(const ProtocolTranscript& t, bool include_snapshots) {
  json out;
  out["protocol"] = t.protocol;
  out["channel"] = t.channel;
  out["lock"] = t.lock;
  out["seed"] = t.seed.value;
  out["branch_probability"] = t.branch_probability;
  json step_list = json::array();
  for (const auto& s : t.steps) {
    json entry{{"step", s.step}, {"labels", s.state.labels()}};
    if (include_snapshots) entry["state"] = to_json(s.state);
    step_list.push_back(std::move(entry));
  }
  out["steps"] = std::move(step_list);
  json intercepts = json::array();
  for (const auto& i : t.intercepts) {
    intercepts.push_back({{"stage", i.stage}, {"holder", i.holder}, {"rho", to_json(i.rho)}});
  }
  out["intercepts"] = std::move(intercepts);
  json decoded = json::array();
  for (const auto& d : t.decoded) {
    decoded.push_back({{"receiver", d.receiver}, {"bits", bits_json(d.bits)}, {"probability", d.probability}});
  }
  out["decoded"] = std::move(decoded);
  json messages = json::array();
  for (const auto& m : t.messages) messages.push_back({{"receiver", m.receiver}, {"bits", bits_json(m.bits)}});
  out["messages"] = std::move(messages);
  json recovered = json::array();
  for (const auto& r : t.recovered) {
    recovered.push_back({{"receiver", r.receiver}, {"fidelity", r.fidelity}, {"state", to_json(r.state)}});
  }
  out["recovered"] = std::move(recovered);
  if (include_snapshots && t.receiver_pre_unlock) out["receiver_pre_unlock"] = to_json(*t.receiver_pre_unlock);
  if (include_snapshots && t.receiver_post_unlock) out["receiver_post_unlock"] = to_json(*t.receiver_post_unlock);
  return out;
}

namespace {

json evidence_json(const std::vector<BitEvidence>& bits) {
  json out = json::array();
  for (const auto& b : bits) {
    out.push_back({{"bit", b.bit}, {"overlap", b.overlap}, {"trace_distance", b.trace_distance}});
  }
  return out;
}

}  // namespace

json to_json(const LockingReport& report) {
  json out;
  out["protocol"] = report.protocol;
  out["task"] = report.task;
  out["lock_used"] = report.lock_used;
  out["decode_correct"] = report.decode_correct;
  out["valid_lock"] = report.valid_lock;
  out["passed"] = report.passed;
  json subsystems = json::array();
  for (const auto& s : report.per_subsystem) {
    json entry{{"holder", s.holder},
               {"subsystem", s.subsystem},
               {"independent_of_encoding", s.independent_of_encoding},
               {"max_pairwise_diff", s.max_pairwise_diff},
               {"maximally_mixed", s.maximally_mixed},
               {"recoverable_bits", evidence_json(s.recoverable_bits)},
               {"leaky_bits", evidence_json(s.leaky_bits)}};
    entry["matches_closed_form"] = s.matches_closed_form ? json(*s.matches_closed_form) : json("n/a");
    if (s.closed_form_diff) entry["closed_form_diff"] = *s.closed_form_diff;
    subsystems.push_back(std::move(entry));
  }
  out["per_subsystem"] = std::move(subsystems);
  json metrics = json::array();
  for (const auto& [k, v] : report.metrics) metrics.push_back({{"name", k}, {"value", v}});
  out["metrics"] = std::move(metrics);
  out["notes"] = report.notes;
  return out;
}

json to_json(const std::vector<DenseCodingBranch>& branches) {
  json out = json::array();
  for (const auto& b : branches) {
    out.push_back({{"bob", bits_json(b.bob)}, {"charlie", bits_json(b.charlie)}, {"probability", b.probability}});
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace simdense::io

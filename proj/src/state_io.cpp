// Copyright 2026 The brach Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "brach/state_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace brach::io {

using nlohmann::json;

StateVector parse_state(const std::string& text, const std::string& source, bool strict,
                        std::ostream& warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re") || !doc.contains("im")) {
    throw ParseError(source + ": expected an object with keys dim, re, im");
  }
  const auto& dim_field = doc["dim"];
  const auto& re = doc["re"];
  const auto& im = doc["im"];
  if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0) {
    throw ParseError(source + ": dim must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_field.get<long long>());
  if (!re.is_array() || !im.is_array() || re.size() != dim || im.size() != dim) {
    throw ParseError(source + ": re and im must be arrays of length dim");
  }

  std::vector<Complex> entries(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (!re[k].is_number() || !im[k].is_number()) throw ParseError(source + ": amplitudes must be numbers");
    entries[k] = Complex(re[k].get<double>(), im[k].get<double>());
    if (!std::isfinite(entries[k].real()) || !std::isfinite(entries[k].imag())) {
      throw ParseError(source + ": non-finite amplitude");
    }
  }
  ComplexVector vec(std::move(entries));
  const double norm = vec.norm();
  if (!(norm > 0.0)) throw ParseError(source + ": zero state vector");
  if (std::abs(norm - 1.0) > kNormSlack) {
    if (strict) throw ParseError(source + ": norm " + format_double(norm) + " is not 1 (strict mode)");
    warnings << "warning: " << source << ": norm " << format_double(norm) << " is not 1; normalising\n";
  }
  return StateVector::normalized(std::move(vec));
}

StateVector read_state_file(const std::string& path, bool strict, std::ostream& warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str(), path, strict, warnings);
}

json state_to_json(const StateVector& state) {
  json re = json::array();
  json im = json::array();
  for (std::size_t k = 0; k < state.dim(); ++k) {
    re.push_back(state[k].real());
    im.push_back(state[k].imag());
  }
  return json{{"dim", state.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    out.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error(path + ": cannot open for writing");
    f << content;
    f.close();
    if (!f) {
      std::filesystem::remove(tmp);
      throw std::runtime_error(path + ": write failed");
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace brach::io

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "tfq/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>
#include <vector>

#include "json.hpp"
#include "tfq/errors.hpp"

namespace tfq {
namespace {

using nlohmann::json;

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) return v;
  std::uint64_t r = 0;
  for (int i = 0; i < 8; ++i) r = (r << 8) | ((v >> (8 * i)) & 0xff);
  return r;
}

void put_double(std::string& out, double d) {
  const std::uint64_t v = to_le(std::bit_cast<std::uint64_t>(d));
  char buf[8];
  std::memcpy(buf, &v, 8);
  out.append(buf, 8);
}

double get_double(const char* p) {
  std::uint64_t v;
  std::memcpy(&v, p, 8);
  return std::bit_cast<double>(to_le(v));
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw IoError(path + " lacks field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw IoError(path + " has a malformed field '" + key + "'");
  }
}

}  // namespace

std::string sidecar_path(const std::string& path) { return path + ".json"; }

void atomic_write(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp + " for writing");
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    os.flush();
    if (!os) {
      std::remove(tmp.c_str());
      throw IoError("write failed for " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename into " + path + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_signal(const std::string& path, const SampledSignal& f) {
  std::ostringstream os;
  os << std::setprecision(17) << "index,re,im\n";
  for (std::size_t k = 0; k < f.n(); ++k) os << k << ',' << f[k].real() << ',' << f[k].imag() << '\n';
  json side = {{"x0", f.x0()}, {"dx", f.dx()}};
  atomic_write(sidecar_path(path), side.dump(2) + "\n");
  atomic_write(path, os.str());
}

namespace {

// strtod accepts subnormal values, which std::stod rejects as out of range.
double parse_double(const std::string& s, const std::string& where) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || std::isinf(v) || std::isnan(v))
    throw IoError(where + ": malformed number '" + s + "'");
  return v;
}

}  // namespace

SampledSignal read_signal(const std::string& path) {
  const json side = read_json(sidecar_path(path));
  const double x0 = field<double>(side, "x0", sidecar_path(path));
  const double dx = field<double>(side, "dx", sidecar_path(path));
  std::istringstream is(read_file(path));
  std::string line;
  if (!std::getline(is, line)) throw IoError(path + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,re,im") throw IoError(path + " lacks the header 'index,re,im'");
  std::vector<cplx> v;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
      throw IoError(path + ":" + std::to_string(lineno) + ": expected three fields");
    const std::string where = path + ":" + std::to_string(lineno);
    unsigned long idx = 0;
    try {
      std::size_t pos = 0;
      idx = std::stoul(a, &pos);
      if (pos != a.size()) throw IoError(where + ": malformed index");
    } catch (const std::logic_error&) {
      throw IoError(where + ": malformed index");
    }
    if (idx != v.size()) throw IoError(where + ": index out of order");
    v.emplace_back(parse_double(b, where), parse_double(c, where));
  }
  try {
    return SampledSignal(std::move(v), x0, dx);
  } catch (const Error& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_matrix(const std::string& path, const TFMatrix& m) {
  const auto& g = m.grid();
  json hdr = {{"format", "tfq-matrix"},
              {"version", 1},
              {"dtype", "float64-le-interleaved-complex"},
              {"layout", "row-major"},
              {"nx", g.nx},
              {"nw", g.nw},
              {"x0", g.x0},
              {"dx", g.dx},
              {"w0", g.w0},
              {"dw", g.dw},
              {"domain", m.domain_tag() == DomainTag::phase_space ? "phase_space" : "ambiguity"}};
  std::string data;
  data.reserve(m.values().size() * 16);
  for (const auto& v : m.values()) {
    put_double(data, v.real());
    put_double(data, v.imag());
  }
  atomic_write(sidecar_path(path), hdr.dump(2) + "\n");
  atomic_write(path, data);
}

TFMatrix read_matrix(const std::string& path) {
  const std::string hp = sidecar_path(path);
  const json hdr = read_json(hp);
  if (field<std::string>(hdr, "format", hp) != "tfq-matrix") throw IoError(hp + " is not a matrix header");
  PhaseSpaceGrid g;
  g.nx = field<std::size_t>(hdr, "nx", hp);
  g.nw = field<std::size_t>(hdr, "nw", hp);
  g.x0 = field<double>(hdr, "x0", hp);
  g.dx = field<double>(hdr, "dx", hp);
  g.w0 = field<double>(hdr, "w0", hp);
  g.dw = field<double>(hdr, "dw", hp);
  const std::string dom = field<std::string>(hdr, "domain", hp);
  if (dom != "phase_space" && dom != "ambiguity") throw IoError(hp + ": unknown domain " + dom);
  const std::string data = read_file(path);
  if (data.size() != g.nx * g.nw * 16)
    throw IoError(path + ": size does not match the header grid");
  std::vector<cplx> v(g.nx * g.nw);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = {get_double(data.data() + 16 * i), get_double(data.data() + 16 * i + 8)};
  return TFMatrix(g, dom == "phase_space" ? DomainTag::phase_space : DomainTag::ambiguity,
                  std::move(v));
}

}  // namespace tfq

#include "pmfa/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pmfa::io {

namespace {

void append_doubles(std::string& out, const Array& a) {
  static_assert(std::endian::native == std::endian::little,
                "file formats assume a little-endian host");
  const size_t bytes = static_cast<size_t>(a.size()) * sizeof(double);
  const size_t at = out.size();
  out.resize(at + bytes);
  std::memcpy(out.data() + at, a.data(), bytes);
}

Array take_doubles(const std::string& in, size_t& at, Index n) {
  const size_t bytes = static_cast<size_t>(n) * sizeof(double);
  if (at + bytes > in.size()) {
    throw std::runtime_error("coefficient file truncated");
  }
  Array a(n);
  std::memcpy(a.data(), in.data() + at, bytes);
  at += bytes;
  return a;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void atomic_write(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      throw std::runtime_error("short write to " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number_or_sentinel(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string s = v.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::runtime_error("unrecognized numeric sentinel: " + s);
}

void write_signal(const std::string& stem, const Array& signal, const json& meta) {
  std::string raw;
  append_doubles(raw, signal);
  atomic_write(stem + ".f64", raw);

  json side = meta;
  side["schema"] = "signal-1";
  side["length"] = signal.size();
  side["sample_domain"] = "unit-interval";
  atomic_write(stem + ".json", side.dump(2) + "\n");
}

Array read_signal_f64(const std::string& path) {
  const std::string raw = slurp(path);
  if (raw.size() % sizeof(double) != 0) {
    throw std::runtime_error("signal file size is not a multiple of 8: " + path);
  }
  size_t at = 0;
  return take_doubles(raw, at, static_cast<Index>(raw.size() / sizeof(double)));
}

Array read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    vals.push_back(std::stod(line));
  }
  Array a(static_cast<Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) a[static_cast<Index>(i)] = vals[i];
  return a;
}

void write_field(const std::string& path, const CoefficientField& field,
                 const std::string& filter_name) {
  json header;
  header["schema"] = "cff-1";
  header["j_max"] = field.j_max;
  header["normalization"] = field.normalization == Normalization::pointwise ? "pointwise" : "l2";
  header["filter"] = filter_name;
  header["approx_len"] = field.approx.size();
  std::string out = header.dump();
  out.push_back('\n');
  append_doubles(out, field.approx);
  for (int j = 0; j <= field.j_max; ++j) append_doubles(out, field.detail[static_cast<size_t>(j)]);
  atomic_write(path, out);
}

CoefficientField read_field(const std::string& path) {
  const std::string raw = slurp(path);
  const size_t nl = raw.find('\n');
  if (nl == std::string::npos) {
    throw std::runtime_error("coefficient file has no header line: " + path);
  }
  const json header = json::parse(raw.substr(0, nl));
  if (header.at("schema").get<std::string>() != "cff-1") {
    throw std::runtime_error("unsupported coefficient file schema in " + path);
  }
  CoefficientField field = CoefficientField::zeros(header.at("j_max").get<int>());
  field.normalization = header.at("normalization").get<std::string>() == "pointwise"
                            ? Normalization::pointwise
                            : Normalization::l2;
  size_t at = nl + 1;
  field.approx = take_doubles(raw, at, header.at("approx_len").get<Index>());
  for (int j = 0; j <= field.j_max; ++j) {
    field.detail[static_cast<size_t>(j)] = take_doubles(raw, at, Index(1) << j);
  }
  return field;
}

json truth_to_json(const generators::GroundTruth& truth) {
  json j;
  j["schema"] = "truth-1";
  j["generator"] = truth.generator;
  j["p0"] = number_or_sentinel(truth.p0);
  if (truth.x0) j["x0"] = *truth.x0;
  if (truth.p_exponent) {
    j["p_exponent"] = {{"intercept", truth.p_exponent->intercept},
                       {"slope", truth.p_exponent->slope}};
  }
  if (truth.lacunarity) j["lacunarity"] = *truth.lacunarity;
  if (truth.eta) {
    j["eta"] = {{"intercept", truth.eta->intercept}, {"slope", truth.eta->slope}};
  }
  if (truth.support_dimension) j["support_dimension"] = *truth.support_dimension;
  if (truth.spectra) {
    j["spectra"] = {{"alpha", truth.spectra->alpha}, {"eta", truth.spectra->eta}};
  }
  if (truth.hmin) j["hmin"] = *truth.hmin;
  return j;
}

generators::GroundTruth truth_from_json(const json& j) {
  generators::GroundTruth truth;
  truth.generator = j.value("generator", std::string{});
  truth.p0 = number_from(j.at("p0"));
  if (j.contains("x0")) truth.x0 = j.at("x0").get<double>();
  if (j.contains("p_exponent")) {
    truth.p_exponent = generators::AffineInQ{j.at("p_exponent").at("intercept").get<double>(),
                                             j.at("p_exponent").at("slope").get<double>()};
  }
  if (j.contains("lacunarity")) truth.lacunarity = j.at("lacunarity").get<double>();
  if (j.contains("eta")) {
    truth.eta = generators::AffineInP{j.at("eta").at("intercept").get<double>(),
                                      j.at("eta").at("slope").get<double>()};
  }
  if (j.contains("support_dimension")) {
    truth.support_dimension = j.at("support_dimension").get<double>();
  }
  if (j.contains("spectra")) {
    truth.spectra = generators::LwsSpectra{j.at("spectra").at("alpha").get<double>(),
                                           j.at("spectra").at("eta").get<double>()};
  }
  if (j.contains("hmin")) truth.hmin = j.at("hmin").get<double>();
  return truth;
}

void write_truth(const std::string& path, const generators::GroundTruth& truth) {
  atomic_write(path, truth_to_json(truth).dump(2) + "\n");
}

generators::GroundTruth read_truth(const std::string& path) {
  return truth_from_json(json::parse(slurp(path)));
}

}  // namespace pmfa::io

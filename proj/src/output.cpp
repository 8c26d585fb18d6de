#include "nuqc/output.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include "nuqc/markers.hpp"

namespace nuqc::output {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 15);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string csv_header(bool with_band) {
  std::string h = "x_m,probability,naqc,chsh,naqc_bound,chsh_bound,naqc_violated,chsh_violated,model";
  if (with_band) h += ",probability_lo,probability_hi,naqc_lo,naqc_hi,chsh_lo,chsh_hi";
  return h;
}

void write_csv(std::ostream& os, const MarkerCurve& curve) {
  const bool with_band = curve.band.has_value();
  const std::string model = to_string(curve.model);
  const std::string naqc_bound = format_double(kNaqcBound);
  const std::string chsh_bound = format_double(kChshBound);
  os << csv_header(with_band) << '\n';
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& pt = curve.points[i];
    const auto& v = pt.values;
    os << format_double(pt.x) << ',' << format_double(v.probability) << ','
       << format_double(v.naqc) << ',' << format_double(v.chsh) << ',' << naqc_bound << ','
       << chsh_bound << ',' << (v.naqc_violated ? 1 : 0) << ',' << (v.chsh_violated ? 1 : 0)
       << ',' << model;
    if (with_band) {
      const PointBand& b = (*curve.band)[i];
      for (const Range* r : {&b.probability, &b.naqc, &b.chsh}) {
        os << ',' << format_double(r->lo) << ',' << format_double(r->hi);
      }
    }
    os << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace nuqc::output

#include "costreg/report.hpp"

#include <charconv>
#include <fstream>

#include "costreg/errors.hpp"

namespace costreg {

std::string format_double(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[512];
  auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
  return std::string(buf, result.ptr);
}

ReportDoc::ReportDoc(const std::string& title) {
  body_ = title + "\n" + std::string(title.size(), '=') + "\n";
}

void ReportDoc::section(const std::string& name) { body_ += "\n[" + name + "]\n"; }

void ReportDoc::kv(const std::string& key, const std::string& value) {
  body_ += key + " = " + value + "\n";
}

void ReportDoc::kv(const std::string& key, const char* value) { kv(key, std::string(value)); }

void ReportDoc::kv(const std::string& key, double value) { kv(key, format_double(value)); }

void ReportDoc::kv(const std::string& key, bool value) {
  kv(key, std::string(value ? "true" : "false"));
}

void ReportDoc::kv(const std::string& key, int value) { kv(key, std::to_string(value)); }

void ReportDoc::kv(const std::string& key, std::int64_t value) { kv(key, std::to_string(value)); }

void ReportDoc::kv(const std::string& key, std::uint64_t value) { kv(key, std::to_string(value)); }

void ReportDoc::kv_fixed(const std::string& key, double value, int decimals) {
  kv(key, format_fixed(value, decimals));
}

std::string contour_csv(const ProfitGrid& grid) {
  std::string out = "beta,price,profit\n";
  for (Index i = 0; i < grid.beta_axis.size(); ++i) {
    for (Index j = 0; j < grid.price_axis.size(); ++j) {
      out += format_fixed(grid.beta_axis(i), 6);
      out += ',';
      out += format_fixed(grid.price_axis(j), 6);
      out += ',';
      out += format_fixed(grid.values(i, j), 6);
      out += '\n';
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
}

}  // namespace costreg

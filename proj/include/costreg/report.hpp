#ifndef COSTREG_REPORT_HPP
#define COSTREG_REPORT_HPP

#include <cstdint>
#include <string>

#include "costreg/campaign.hpp"

namespace costreg {

// Locale-independent shortest round-trip representation.
std::string format_double(double value);
// Locale-independent fixed decimal places.
std::string format_fixed(double value, int decimals);

// Deterministic structured text document: a title line, then [section]
// blocks of `key = value` lines. No timestamps, so identical inputs give
// byte-identical reports.
class ReportDoc {
 public:
  explicit ReportDoc(const std::string& title);

  void section(const std::string& name);
  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, const char* value);
  void kv(const std::string& key, double value);
  void kv(const std::string& key, bool value);
  void kv(const std::string& key, int value);
  void kv(const std::string& key, std::int64_t value);
  void kv(const std::string& key, std::uint64_t value);
  void kv_fixed(const std::string& key, double value, int decimals);

  const std::string& str() const { return body_; }

 private:
  std::string body_;
};

// Header "beta,price,profit"; one row per grid cell, row-major by beta
// then price; all values with 6 decimal places; LF line endings.
std::string contour_csv(const ProfitGrid& grid);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace costreg

#endif  // COSTREG_REPORT_HPP

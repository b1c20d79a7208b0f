// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fplab::cli {

enum class Format { human, records };

/// A field value; numbers are rendered per format (6 significant digits for
/// people, shortest round-trip text for records).
using Value = std::variant<std::string, double, std::int64_t, bool>;

struct Field {
  std::string key;
  Value value;

  Field(std::string k, std::string v) : key(std::move(k)), value(std::move(v)) {}
  Field(std::string k, const char* v) : key(std::move(k)), value(std::string(v)) {}
  Field(std::string k, double v) : key(std::move(k)), value(v) {}
  Field(std::string k, std::size_t v) : key(std::move(k)), value(static_cast<std::int64_t>(v)) {}
  Field(std::string k, int v) : key(std::move(k)), value(static_cast<std::int64_t>(v)) {}
  Field(std::string k, bool v) : key(std::move(k)), value(v) {}
  /// "none" when empty.
  Field(std::string k, const std::optional<double>& v);
};

/// Writes one line per record.
///
/// records: type<TAB>key=value<TAB>... with fields in the order given.
/// human:   type: key value, key value, ...
class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  [[nodiscard]] Format format() const noexcept { return format_; }

  void record(std::string_view type, const std::vector<Field>& fields);

  /// Emits every item in records format but at most `cap` in human format,
  /// followed by a count of the omitted ones.
  template <class Items, class Fn>
  void limited(std::string_view type, const Items& items, Fn to_fields, std::size_t cap = 20) {
    std::size_t shown = 0;
    for (const auto& item : items) {
      if (format_ == Format::human && shown == cap) break;
      record(type, to_fields(item));
      ++shown;
    }
    const std::size_t total = static_cast<std::size_t>(std::distance(std::begin(items), std::end(items)));
    if (shown < total) out_ << "  ... " << (total - shown) << " more " << type << " entries\n";
  }

  [[nodiscard]] std::string render(const Value& value) const;

 private:
  std::ostream& out_;
  Format format_;
};

}  // namespace fplab::cli

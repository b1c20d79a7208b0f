// SPDX-License-Identifier: Apache-2.0
#include "emitter.hpp"

#include <algorithm>

#include "fplab/format.hpp"

namespace fplab::cli {

Field::Field(std::string k, const std::optional<double>& v)
    : key(std::move(k)), value(v ? Value(*v) : Value(std::string("none"))) {}

std::string Emitter::render(const Value& value) const {
  if (const auto* s = std::get_if<std::string>(&value)) {
    std::string out = *s;
    std::replace_if(out.begin(), out.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
    return out;
  }
  if (const auto* d = std::get_if<double>(&value))
    return format_ == Format::records ? format_real(*d) : format_significant(*d, 6);
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  return std::get<bool>(value) ? "true" : "false";
}

void Emitter::record(std::string_view type, const std::vector<Field>& fields) {
  if (format_ == Format::records) {
    out_ << type;
    for (const auto& f : fields) out_ << '\t' << f.key << '=' << render(f.value);
  } else {
    out_ << type << ':';
    bool first = true;
    for (const auto& f : fields) {
      out_ << (first ? " " : ", ") << f.key << ' ' << render(f.value);
      first = false;
    }
  }
  out_ << '\n';
}

}  // namespace fplab::cli

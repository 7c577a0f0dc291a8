#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace eqforge::jsonout {

// Deterministic report serialization: nlohmann's default object (std::map)
// already orders keys; doubles are printed with %.17g so identical inputs
// produce byte-identical files.
inline void dump_impl(const nlohmann::json& j, std::string& out, int indent,
                      int depth) {
  const auto pad = [&out, indent](int d) {
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        dump_impl(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        dump_impl(item, out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

inline std::string dump(const nlohmann::json& j, int indent = 2) {
  std::string out;
  dump_impl(j, out, indent, 0);
  out += "\n";
  return out;
}

} // namespace eqforge::jsonout

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gph {

// Deterministic number formatting shared by the CSV and JSON emitters.
// %.17g survives a round trip; fmt_double is the general-purpose form.
std::string fmt_double(double v);
std::string fmt_double(double v, int significant);

// Minimal emit-only JSON builder. Keys are written in call order; callers are
// expected to emit them in a fixed order so outputs are byte-stable.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long v);
  JsonWriter& value(unsigned long long v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view s);
  JsonWriter& raw(std::string_view s);
  JsonWriter& null();

  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> first_stack_{};
  bool pending_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace gph

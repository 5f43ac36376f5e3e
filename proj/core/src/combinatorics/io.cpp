#include "gph/combinatorics/io.hpp"

#include "gph/common/json_writer.hpp"

namespace gph::comb {

namespace {

void write_int_array(JsonWriter& w, const std::vector<int>& v) {
  w.begin_array();
  for (int x : v) w.value(x);
  w.end_array();
}

void write_map(JsonWriter& w, const CollisionMap& map) {
  w.begin_object();
  w.key("n").value(map.depth());
  w.key("mu");
  write_int_array(w, map.values());
  w.end_object();
}

void write_class(JsonWriter& w, const EchelonClass& cls) {
  w.begin_object();
  w.key("representative");
  write_int_array(w, cls.representative.values());
  w.key("members").begin_array();
  for (const auto& mem : cls.members) {
    w.begin_object();
    w.key("mu");
    write_int_array(w, mem.map.values());
    w.key("sigma");
    write_int_array(w, mem.perm.one_line());
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

}  // namespace

std::string map_json(const CollisionMap& map) {
  JsonWriter w;
  write_map(w, map);
  return w.str();
}

std::string class_json(const EchelonClass& cls) {
  JsonWriter w;
  write_class(w, cls);
  return w.str();
}

std::string classes_json(const std::vector<EchelonClass>& classes) {
  JsonWriter w;
  w.begin_array();
  for (const auto& c : classes) write_class(w, c);
  w.end_array();
  return w.str();
}

std::string maps_json(const std::vector<CollisionMap>& maps) {
  JsonWriter w;
  w.begin_array();
  for (const auto& m : maps) write_map(w, m);
  w.end_array();
  return w.str();
}

std::string counts_csv(const std::vector<CountRow>& rows) {
  std::string out = "n,n_factorial,echelon_count,four_pow_n,partition_count\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.n_factorial) + ',' +
           std::to_string(r.echelon_count) + ',' + std::to_string(r.four_pow_n) + ',' +
           std::to_string(r.partition_count) + '\n';
  }
  return out;
}

}  // namespace gph::comb

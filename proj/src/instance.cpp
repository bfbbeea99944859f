#include "pnbd/instance.hpp"

#include <fstream>
#include <sstream>

namespace pnbd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

ObjPtr parse_object(Ctx ctx, const std::string& name, const json& spec) {
  const std::string path = "objects." + name;
  if (!spec.is_object()) fail(path, "expected an object");
  if (spec.contains("points")) {
    if (ctx != Ctx::FinSet) fail(path, "points carrier in a fingrp file");
    const auto& pts = spec["points"];
    if (!pts.is_array()) fail(path + ".points", "expected an array");
    std::vector<std::string> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!pts[i].is_string())
        fail(path + ".points[" + std::to_string(i) + "]", "expected a string");
      points.push_back(pts[i].get<std::string>());
    }
    try {
      return make_finset(std::move(points));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (spec.contains("group")) {
    if (ctx != Ctx::FinGrp) fail(path, "group carrier in a finset file");
    const auto& g = spec["group"];
    try {
      if (g.is_string()) return make_builtin_group(g.get<std::string>());
      if (g.is_object() && g.contains("table")) {
        const auto& t = g["table"];
        if (!t.is_array()) fail(path + ".group.table", "expected an array");
        std::vector<std::vector<int>> table;
        for (const auto& row : t) {
          if (!row.is_array()) fail(path + ".group.table", "expected rows");
          table.push_back(row.get<std::vector<int>>());
        }
        return make_group_object(GroupTable::from_table(table));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(path + ".group", e.what());
    }
    fail(path + ".group", "expected a builtin name or {\"table\": ...}");
  }
  fail(path, "expected a \"points\" or \"group\" carrier");
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("root: expected an object");
  for (auto& [key, _] : j.items())
    if (key != "context" && key != "objects" && key != "systems" && key != "morphisms")
      fail(key, "unknown top-level key");

  InstanceFile f;
  if (!j.contains("context") || !j["context"].is_string())
    fail("context", "expected \"finset\" or \"fingrp\"");
  auto ctx = ctx_from_name(j["context"].get<std::string>());
  if (!ctx) fail("context", "expected \"finset\" or \"fingrp\"");
  f.context = *ctx;

  if (j.contains("objects")) {
    if (!j["objects"].is_object()) fail("objects", "expected an object map");
    for (auto& [name, spec] : j["objects"].items())
      f.objects.emplace(name, parse_object(f.context, name, spec));
  }

  if (j.contains("systems")) {
    if (!j["systems"].is_object()) fail("systems", "expected an object map");
    for (auto& [name, spec] : j["systems"].items()) {
      const std::string path = "systems." + name;
      if (!spec.is_object() || !spec.contains("object") || !spec["object"].is_string())
        fail(path, "expected {\"object\": ..., \"generators\": ...}");
      std::string objname = spec["object"].get<std::string>();
      auto it = f.objects.find(objname);
      if (it == f.objects.end()) fail(path + ".object", "dangling reference " + objname);
      const ObjPtr& obj = it->second;
      if (!spec.contains("generators") || !spec["generators"].is_object())
        fail(path, "missing generators table");
      const auto& L = *obj->sub;
      std::vector<Elem> gen(static_cast<std::size_t>(L.size()), -1);
      for (auto& [from, to] : spec["generators"].items()) {
        auto fe = L.find_label(from);
        if (!fe) fail(path + ".generators", "unknown subobject label \"" + from + "\"");
        if (!to.is_string()) fail(path + ".generators." + from, "expected a label");
        auto te = L.find_label(to.get<std::string>());
        if (!te)
          fail(path + ".generators." + from,
               "unknown subobject label \"" + to.get<std::string>() + "\"");
        gen[static_cast<std::size_t>(*fe)] = *te;
      }
      for (Elem e = 0; e < L.size(); ++e)
        if (gen[static_cast<std::size_t>(e)] < 0)
          fail(path + ".generators", "missing entry for \"" + L.label(e) + "\"");
      try {
        f.systems.emplace(name, make_system(obj, std::move(gen)));
      } catch (const Error& e) {
        fail(path, e.what());
      }
      f.system_object.emplace(name, objname);
    }
  }

  if (j.contains("morphisms")) {
    if (!j["morphisms"].is_object()) fail("morphisms", "expected an object map");
    for (auto& [name, spec] : j["morphisms"].items()) {
      const std::string path = "morphisms." + name;
      if (!spec.is_object() || !spec.contains("dom") || !spec.contains("cod") ||
          !spec.contains("map"))
        fail(path, "expected {\"dom\": ..., \"cod\": ..., \"map\": ...}");
      std::string dn = spec["dom"].get<std::string>(), cn = spec["cod"].get<std::string>();
      auto di = f.objects.find(dn);
      if (di == f.objects.end()) fail(path + ".dom", "dangling reference " + dn);
      auto ci = f.objects.find(cn);
      if (ci == f.objects.end()) fail(path + ".cod", "dangling reference " + cn);
      const ObjPtr& dom = di->second;
      const ObjPtr& cod = ci->second;
      if (!spec["map"].is_object()) fail(path + ".map", "expected a point map");
      std::vector<int> map(static_cast<std::size_t>(dom->carrier_size()), -1);
      for (auto& [from, to] : spec["map"].items()) {
        int fi = dom->point_index(from);
        if (fi < 0) fail(path + ".map", "unknown point \"" + from + "\"");
        if (!to.is_string()) fail(path + ".map." + from, "expected a point label");
        int ti = cod->point_index(to.get<std::string>());
        if (ti < 0) fail(path + ".map." + from, "unknown point \"" + to.get<std::string>() + "\"");
        map[static_cast<std::size_t>(fi)] = ti;
      }
      for (int i = 0; i < dom->carrier_size(); ++i)
        if (map[static_cast<std::size_t>(i)] < 0)
          fail(path + ".map", "missing entry for point \"" +
                                  dom->points[static_cast<std::size_t>(i)] + "\"");
      try {
        f.morphisms.emplace(name, NamedMorphism{dn, cn, make_morphism(dom, cod, map)});
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }
  }
  return f;
}

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

nlohmann::ordered_json serialize_instance(const InstanceFile& f) {
  ordered_json j;
  j["context"] = ctx_name(f.context);
  ordered_json objs = ordered_json::object();
  for (const auto& [name, obj] : f.objects) {
    if (f.context == Ctx::FinSet) {
      objs[name] = ordered_json{{"points", obj->points}};
    } else {
      std::vector<std::vector<int>> table(
          static_cast<std::size_t>(obj->group.order),
          std::vector<int>(static_cast<std::size_t>(obj->group.order)));
      for (int a = 0; a < obj->group.order; ++a)
        for (int b = 0; b < obj->group.order; ++b)
          table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              obj->group.at(a, b);
      objs[name] = ordered_json{{"group", ordered_json{{"table", table}}}};
    }
  }
  j["objects"] = std::move(objs);
  ordered_json syss = ordered_json::object();
  for (const auto& [name, sys] : f.systems) {
    ordered_json gens = ordered_json::object();
    const auto& L = sys.lat();
    for (Elem e = 0; e < L.size(); ++e) gens[L.label(e)] = L.label(sys.g(e));
    syss[name] =
        ordered_json{{"object", f.system_object.at(name)}, {"generators", gens}};
  }
  j["systems"] = std::move(syss);
  ordered_json mors = ordered_json::object();
  for (const auto& [name, nm] : f.morphisms) {
    ordered_json map = ordered_json::object();
    for (int i = 0; i < nm.mor.dom->carrier_size(); ++i)
      map[nm.mor.dom->points[static_cast<std::size_t>(i)]] =
          nm.mor.cod->points[static_cast<std::size_t>(nm.mor(i))];
    mors[name] = ordered_json{{"dom", nm.dom}, {"cod", nm.cod}, {"map", map}};
  }
  j["morphisms"] = std::move(mors);
  return j;
}

std::string serialize_instance_text(const InstanceFile& f) {
  return serialize_instance(f).dump(2) + "\n";
}

void witness_add_object(InstanceFile& f, const std::string& name, const ObjPtr& obj) {
  f.objects[name] = with_default_labels(obj);
}

void witness_add_system(InstanceFile& f, const std::string& name,
                        const std::string& obj_name, const PreNbdSystem& sys) {
  auto obj = with_default_labels(sys.object);
  f.objects[obj_name] = obj;
  f.systems.insert_or_assign(name, PreNbdSystem{obj, sys.gen});
  f.system_object[name] = obj_name;
}

void witness_add_morphism(InstanceFile& f, const std::string& name,
                          const std::string& dom, const std::string& cod,
                          const MorphismInstance& mor) {
  auto d = with_default_labels(mor.dom);
  auto c = with_default_labels(mor.cod);
  f.objects[dom] = d;
  f.objects[cod] = c;
  f.morphisms.insert_or_assign(name, NamedMorphism{dom, cod, MorphismInstance{d, c, mor.map}});
}

}  // namespace pnbd

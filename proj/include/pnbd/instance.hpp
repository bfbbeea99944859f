#pragma once

// Instance files: named objects, systems and morphisms in one context.
// The JSON schema is the workbench's only persistent format; serialization
// is canonical (sorted names, stable key order) and round-trips exactly.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pnbd/system.hpp"

namespace pnbd {

struct NamedMorphism {
  std::string dom, cod;  // object names
  MorphismInstance mor;
};

struct InstanceFile {
  Ctx context = Ctx::FinSet;
  std::map<std::string, ObjPtr> objects;
  std::map<std::string, std::string> system_object;  // system name -> object name
  std::map<std::string, PreNbdSystem> systems;
  std::map<std::string, NamedMorphism> morphisms;
};

InstanceFile parse_instance_text(const std::string& text);
InstanceFile parse_instance_file(const std::string& path);
nlohmann::ordered_json serialize_instance(const InstanceFile& f);
std::string serialize_instance_text(const InstanceFile& f);

// Witnesses are self-contained instance files plus the CLI invocation that
// reproduces the failure (exit code 1 under --expect-pass).
struct Witness {
  InstanceFile instance;
  std::vector<std::string> replay_args;
  std::string note;
};

// Convenience builders used when assembling witnesses.
void witness_add_object(InstanceFile& f, const std::string& name, const ObjPtr& obj);
void witness_add_system(InstanceFile& f, const std::string& name,
                        const std::string& obj_name, const PreNbdSystem& sys);
void witness_add_morphism(InstanceFile& f, const std::string& name,
                          const std::string& dom, const std::string& cod,
                          const MorphismInstance& mor);

}  // namespace pnbd

#include "matkern/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "matkern/errors.hpp"

namespace matkern {

namespace {

using nlohmann::json;

constexpr const char* kInstanceVersion = "matkern-instance-v1";
constexpr const char* kKernelVersion = "matkern-kernel-v1";
constexpr std::uint64_t kMaxWeight = 1'000'000'000'000'000'000ULL;  // 1e18

json matroid_to_json(const Matroid& m) {
  json j;
  if (const auto* u = dynamic_cast<const UniformMatroid*>(&m)) {
    j["type"] = "uniform";
    j["rank"] = u->rank_limit();
  } else if (const auto* p = dynamic_cast<const PartitionMatroid*>(&m)) {
    j["type"] = "partition";
    j["blocks"] = p->blocks();
    j["caps"] = p->caps();
  } else if (const auto* g = dynamic_cast<const GraphicMatroid*>(&m)) {
    j["type"] = "graphic";
    j["vertices"] = g->vertex_count();
    json edges = json::array();
    for (const auto& [a, b] : g->edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
  } else if (const auto* c = dynamic_cast<const CographicMatroid*>(&m)) {
    j["type"] = "cographic";
    j["vertices"] = c->vertex_count();
    json edges = json::array();
    for (const auto& [a, b] : c->edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
  } else if (const auto* t = dynamic_cast<const TransversalMatroid*>(&m)) {
    j["type"] = "transversal";
    j["right_vertices"] = t->right_count();
    j["adjacency"] = t->adjacency();
  } else if (const auto* l = dynamic_cast<const LaminarMatroid*>(&m)) {
    j["type"] = "laminar";
    json sets = json::array();
    for (const auto& node : l->family().nodes()) {
      sets.push_back({{"elements", node.elements}, {"cap", node.cap}});
    }
    j["sets"] = std::move(sets);
  } else if (const auto* r = dynamic_cast<const RestrictionMatroid*>(&m)) {
    j["type"] = "restriction";
    j["subset"] = r->subset();
    j["inner"] = matroid_to_json(*r->inner());
  } else if (const auto* tr = dynamic_cast<const TruncationMatroid*>(&m)) {
    j["type"] = "truncation";
    j["bound"] = tr->bound();
    j["inner"] = matroid_to_json(*tr->inner());
  } else {
    throw malformed_input("serialize: unsupported matroid class " +
                          m.class_name());
  }
  return j;
}

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw malformed_input(std::string("parse: missing integer field '") +
                          field + "'");
  }
  return j[field].get<int>();
}

MatroidPtr matroid_from_json(const json& j, int n) {
  if (!j.contains("type") || !j["type"].is_string()) {
    throw malformed_input("parse: matroid without a 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "uniform") {
      return std::make_shared<UniformMatroid>(n, require_int(j, "rank"));
    }
    if (type == "partition") {
      auto blocks = j.at("blocks").get<std::vector<ElementSet>>();
      auto caps = j.at("caps").get<std::vector<int>>();
      return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                                std::move(caps));
    }
    if (type == "graphic" || type == "cographic") {
      const int v = require_int(j, "vertices");
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw malformed_input("parse: edge must be a pair");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      if (edges.size() != static_cast<std::size_t>(n)) {
        throw malformed_input("parse: matroid edge count must equal n");
      }
      if (type == "graphic") {
        return std::make_shared<GraphicMatroid>(v, std::move(edges));
      }
      return std::make_shared<CographicMatroid>(v, std::move(edges));
    }
    if (type == "transversal") {
      auto adjacency = j.at("adjacency").get<std::vector<ElementSet>>();
      if (adjacency.size() != static_cast<std::size_t>(n)) {
        throw malformed_input("parse: adjacency length must equal n");
      }
      return std::make_shared<TransversalMatroid>(
          std::move(adjacency), require_int(j, "right_vertices"));
    }
    if (type == "laminar") {
      std::vector<std::pair<ElementSet, int>> sets;
      for (const auto& s : j.at("sets")) {
        sets.emplace_back(s.at("elements").get<ElementSet>(),
                          s.at("cap").get<int>());
      }
      return std::make_shared<LaminarMatroid>(
          LaminarFamily(n, std::move(sets)));
    }
    if (type == "restriction") {
      return restrict_to(matroid_from_json(j.at("inner"), n),
                         j.at("subset").get<ElementSet>());
    }
    if (type == "truncation") {
      return truncate(matroid_from_json(j.at("inner"), n),
                      require_int(j, "bound"));
    }
  } catch (const json::exception& e) {
    throw malformed_input("parse: malformed '" + type +
                          "' matroid: " + e.what());
  }
  throw malformed_input("parse: unknown matroid type '" + type + "'");
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw malformed_input("parse: invalid JSON document");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw malformed_input("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw malformed_input("cannot write file: " + path);
  out << text;
}

json instance_to_json_object(const Instance& instance) {
  json j;
  j["version"] = kInstanceVersion;
  j["name"] = instance.name;
  j["kind"] =
      instance.kind == InstanceKind::matching ? "matching" : "intersection";
  j["n"] = instance.n;
  j["k"] = instance.k;
  j["weights"] = instance.weights;
  json ms = json::array();
  for (const MatroidPtr& m : instance.matroids) {
    ms.push_back(matroid_to_json(*m));
  }
  j["matroids"] = std::move(ms);
  if (instance.graph) {
    json edges = json::array();
    for (const auto& [a, b] : instance.graph->edges) edges.push_back({a, b});
    j["graph"] = {{"vertices", instance.graph->vertex_count},
                  {"edges", std::move(edges)}};
  }
  return j;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  return instance_to_json_object(instance).dump(2) + "\n";
}

Instance instance_from_json(const std::string& text, const WarningSink& warn) {
  json j = parse_text(text);
  if (!j.contains("version") || j["version"] != kInstanceVersion) {
    throw malformed_input("parse: missing or unsupported instance version");
  }
  Instance instance;
  try {
    instance.name = j.value("name", std::string{});
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "intersection") {
      instance.kind = InstanceKind::intersection;
    } else if (kind == "matching") {
      instance.kind = InstanceKind::matching;
    } else {
      throw malformed_input("parse: unknown instance kind '" + kind + "'");
    }
    instance.n = require_int(j, "n");
    instance.k = require_int(j, "k");
    instance.weights = j.at("weights").get<Weights>();
    for (std::uint64_t w : instance.weights) {
      if (w > kMaxWeight) {
        throw malformed_input("parse: weight exceeds 10^18");
      }
    }
    for (const auto& mj : j.at("matroids")) {
      instance.matroids.push_back(matroid_from_json(mj, instance.n));
    }
    if (j.contains("graph")) {
      GraphSpec graph;
      graph.vertex_count = require_int(j["graph"], "vertices");
      for (const auto& e : j["graph"].at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw malformed_input("parse: graph edge must be a pair");
        }
        graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      instance.graph = std::move(graph);
    }
  } catch (const json::exception& e) {
    throw malformed_input(std::string("parse: malformed instance: ") +
                          e.what());
  }
  instance.validate();
  if (warn) {
    for (std::size_t i = 0; i < instance.matroids.size(); ++i) {
      const auto& loops = instance.matroids[i]->loops();
      if (!loops.empty()) {
        std::string ids;
        for (int e : loops) ids += (ids.empty() ? "" : ",") + std::to_string(e);
        warn("matroid " + std::to_string(i) + " (" +
             instance.matroids[i]->class_name() + ") has " +
             std::to_string(loops.size()) + " loop element(s) removed by " +
             "normalization: " + ids);
      }
    }
  }
  return instance;
}

Instance load_instance(const std::string& path, const WarningSink& warn) {
  return instance_from_json(read_file(path), warn);
}

void save_instance(const Instance& instance, const std::string& path) {
  write_file(path, instance_to_json(instance));
}

std::string instance_digest(const Instance& instance) {
  const std::string bytes = instance_to_json_object(instance).dump();
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int hash_len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), hash, &hash_len, EVP_sha256(),
                 nullptr) != 1) {
    throw error("instance_digest: SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < hash_len; ++i) {
    out.push_back(hex[hash[i] >> 4]);
    out.push_back(hex[hash[i] & 0xf]);
  }
  return out;
}

std::string kernel_to_json(const KernelFile& kernel) {
  json j;
  j["version"] = kKernelVersion;
  j["instance_digest"] = kernel.instance_digest;
  j["algorithm"] = kernel.algorithm;
  j["seed"] = kernel.seed;
  j["rounds"] = kernel.rounds;
  j["repeat"] = kernel.repeat;
  j["elements"] = kernel.elements;
  return j.dump(2) + "\n";
}

KernelFile kernel_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("version") || j["version"] != kKernelVersion) {
    throw malformed_input("parse: missing or unsupported kernel version");
  }
  KernelFile kernel;
  try {
    kernel.instance_digest = j.at("instance_digest").get<std::string>();
    kernel.algorithm = j.at("algorithm").get<std::string>();
    kernel.seed = j.at("seed").get<std::uint64_t>();
    kernel.rounds = j.at("rounds").get<std::int64_t>();
    kernel.repeat = j.at("repeat").get<int>();
    kernel.elements = j.at("elements").get<ElementSet>();
  } catch (const json::exception& e) {
    throw malformed_input(std::string("parse: malformed kernel: ") + e.what());
  }
  if (!is_canonical_set(kernel.elements)) {
    throw malformed_input("parse: kernel elements must be sorted and unique");
  }
  return kernel;
}

KernelFile load_kernel(const std::string& path) {
  return kernel_from_json(read_file(path));
}

void save_kernel(const KernelFile& kernel, const std::string& path) {
  write_file(path, kernel_to_json(kernel));
}

std::string report_to_json(const VerificationReport& report) {
  json j;
  json violations = json::array();
  for (const auto& [x_set, x] : report.single_exc_violations) {
    violations.push_back({{"X", x_set}, {"x", x}});
  }
  j["single_exc_violations"] = std::move(violations);
  j["reachability_failures"] = report.reachability_failures;
  j["opt_full"] = report.opt_full;
  j["opt_kernel"] = report.opt_kernel;
  j["trials"] = report.trials;
  j["successes"] = report.successes;
  j["clean"] = report.clean();
  return j.dump(2) + "\n";
}

}  // namespace matkern

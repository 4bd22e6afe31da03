#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "matkern/instance.hpp"
#include "matkern/kernel.hpp"
#include "matkern/verify.hpp"

namespace matkern {

using WarningSink = std::function<void(const std::string&)>;

// Canonical JSON text (sorted keys, canonical id ordering, 2-space indent,
// trailing newline). parse -> write is byte-stable.
std::string instance_to_json(const Instance& instance);

// Parses and validates; emits a warning per matroid that has loop elements.
Instance instance_from_json(const std::string& text,
                            const WarningSink& warn = {});

Instance load_instance(const std::string& path, const WarningSink& warn = {});
void save_instance(const Instance& instance, const std::string& path);

// "sha256:<hex>" over the compact canonical serialization.
std::string instance_digest(const Instance& instance);

struct KernelFile {
  std::string instance_digest;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::int64_t rounds = 0;
  int repeat = 1;
  ElementSet elements;
};

std::string kernel_to_json(const KernelFile& kernel);
KernelFile kernel_from_json(const std::string& text);
KernelFile load_kernel(const std::string& path);
void save_kernel(const KernelFile& kernel, const std::string& path);

std::string report_to_json(const VerificationReport& report);

}  // namespace matkern

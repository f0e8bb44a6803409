#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "bott/soliton.hpp"

namespace bott {

// Which algebra and connection to build. No distribution means Levi-Civita.
struct Instance {
  GroupId group = GroupId::G1;
  int eta = 1;
  std::optional<DistId> dist;
  bool perturbed = false;

  std::string str() const;
  auto key() const { return std::tuple(group, eta, dist, perturbed); }
};

struct Computed {
  LieAlgebraSpec spec;
  Connection lc;
  Connection conn;
  CurvatureTensor curvature;
  BilinearForm ricci;
  BilinearForm sym_ricci;
  BilinearForm lie;
  SolitonSystem system;
};

Computed compute(const LieAlgebraSpec& spec, std::optional<DistId> dist, bool perturbed);
Computed compute(const Instance& inst);

// Thread-safe memo of compute(); entries are never evicted.
class PipelineCache {
 public:
  const Computed& get(const Instance& inst);

 private:
  std::mutex mu_;
  std::map<decltype(Instance{}.key()), std::shared_ptr<const Computed>> cache_;
};

}  // namespace bott

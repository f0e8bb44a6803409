#include "bott/pipeline.hpp"

namespace bott {

std::string Instance::str() const {
  std::string s = group_name(group);
  if (group == GroupId::G4) s += eta > 0 ? " eta=+1" : " eta=-1";
  s += dist ? " " + dist_name(*dist) : " Levi-Civita";
  if (perturbed) s += " perturbed";
  return s;
}

Computed compute(const LieAlgebraSpec& spec, std::optional<DistId> dist, bool perturbed) {
  if (perturbed && !dist) throw std::invalid_argument("the perturbation needs a distribution");
  Computed c;
  c.spec = spec;
  c.lc = levi_civita(c.spec);
  c.conn = c.lc;
  if (dist) c.conn = bott(c.spec, c.lc, distribution(*dist));
  if (perturbed) c.conn = perturb(c.conn);
  c.curvature = riemann(c.spec, c.conn);
  c.ricci = ricci(c.curvature);
  c.sym_ricci = symmetrize(c.ricci);
  c.lie = lie_derivative_form(c.conn, soliton_field());
  c.system = build_system(c.spec, c.conn);
  return c;
}

Computed compute(const Instance& inst) { return compute(catalog(inst.group, inst.eta), inst.dist, inst.perturbed); }

const Computed& PipelineCache::get(const Instance& inst) {
  auto k = inst.key();
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return *it->second;
  }
  auto made = std::make_shared<const Computed>(compute(inst));
  std::lock_guard lock(mu_);
  auto [it, inserted] = cache_.emplace(k, std::move(made));
  return *it->second;
}

}  // namespace bott

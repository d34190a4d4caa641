#include "colp/classify.hpp"

#include <algorithm>
#include <map>

namespace colp {

DeltaComplex delta_of(const PosetIdeal& ideal, const Guards& guards) {
  const auto& space = ideal.space();
  DeltaComplex out;
  out.b_sets = achieved_letters(ideal);

  std::vector<std::string> names;
  std::map<std::pair<std::size_t, int>, std::size_t> index;
  for (std::size_t i = 0; i < space.m(); ++i)
    for (int a : space.alphabet.sets[i]) {
      const std::string label = "(" + space.poset.name(i) + "," + std::to_string(a) + ")";
      if (!std::binary_search(out.b_sets[i].begin(), out.b_sets[i].end(), a)) {
        out.discarded.push_back(label);
        continue;
      }
      index[{i, a}] = names.size();
      out.vertex.emplace_back(i, a);
      names.push_back(label);
    }
  if (names.size() > 64) throw InputError("Delta(A) has more than 64 vertices");
  check_guard(ideal.size() <= guards.faces, "faces", guards.faces);

  const Face all = names.size() == 64 ? ~Face{0} : (Face{1} << names.size()) - 1;
  std::vector<Face> gammas, facets;
  for (const auto& f : ideal.members()) {
    Face g = 0;
    for (std::size_t i = 0; i < space.m(); ++i) g |= Face{1} << index.at({i, f[i]});
    gammas.push_back(g);
    facets.push_back(all & ~g);
  }
  out.complex = SimplicialComplex(names, facets);
  verify(out.complex.facets().size() == ideal.size(), "facets of Delta(A) do not biject with A");

  // Minimal non-faces must be the generators of the Alexander dual of L.
  std::vector<Variable> vars;
  for (const auto& [i, a] : out.vertex) vars.emplace_back(static_cast<int>(i), a);
  const auto dual = alexander_dual(ideal_of(ideal), vars);
  std::vector<Face> nonfaces;
  for (const auto& g : dual.generators()) {
    Face mask = 0;
    for (const auto& [v, e] : g.terms()) mask |= Face{1} << index.at({static_cast<std::size_t>(v.element), v.letter});
    verify(!out.complex.contains(mask), "dual generator " + to_string(g) + " is a face of Delta(A)");
    for (Face r = mask; r; r &= r - 1)
      verify(out.complex.contains(mask & ~(r & -r)), "dual generator " + to_string(g) + " is not a minimal non-face");
    nonfaces.push_back(mask);
  }
  if (names.size() <= 14) {
    for (Face s = 0; s <= all; ++s) {
      const bool blocked = std::any_of(nonfaces.begin(), nonfaces.end(), [&](Face n) { return (n & s) == n; });
      verify(blocked != out.complex.contains(s), "Stanley-Reisner ideal and Delta(A) disagree at " +
                                                     out.complex.face_to_string(s));
    }
  }
  return out;
}

HomologyCertificate certify_homology_type(const SimplicialComplex& d, FieldChoice field, const Guards& guards) {
  if (d.is_void()) throw InputError("certify_homology_type: void complex");
  HomologyCertificate cert;
  const auto faces = d.faces(guards.faces);
  cert.faces_checked = faces.size();
  cert.homology = reduced_homology(d, field, guards.faces);

  std::vector<char> sphere_link(faces.size()), zero_link(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto lk = link(d, faces[i]);
    const auto h = reduced_homology(lk, field, guards.faces);
    sphere_link[i] = has_sphere_homology(h, lk.dim());
    zero_link[i] = has_zero_homology(h);
  }
  cert.sphere = std::all_of(sphere_link.begin(), sphere_link.end(), [](char c) { return c != 0; });
  if (cert.sphere) return cert;

  if (!d.is_pure()) {
    cert.failure = "complex is not pure";
    return cert;
  }
  cert.boundary = boundary(d);
  const auto& sigma = cert.boundary;
  if (sigma.is_void() || sigma.dim() != d.dim() - 1) {
    cert.failure = "boundary does not have dimension " + std::to_string(d.dim() - 1);
    return cert;
  }
  for (Face g : sigma.faces(guards.faces)) {
    const auto lk = link(sigma, g);
    if (!has_sphere_homology(reduced_homology(lk, field, guards.faces), lk.dim())) {
      cert.failure = "boundary is not a homology sphere at " + sigma.face_to_string(g);
      return cert;
    }
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const bool on_boundary = sigma.contains(faces[i]);
    if (on_boundary ? !zero_link[i] : !sphere_link[i]) {
      cert.failure = std::string(on_boundary ? "boundary" : "interior") + " face " + d.face_to_string(faces[i]) +
                     " has the wrong link homology";
      return cert;
    }
  }
  cert.ball = true;
  return cert;
}

ClassificationReport classify(const PosetIdeal& ideal, bool certify, FieldChoice field, const Guards& guards) {
  ClassificationReport rep;
  rep.delta = delta_of(ideal, guards);
  rep.b_sets = rep.delta.b_sets;
  const auto& space = ideal.space();
  const int m = static_cast<int>(space.m());

  // The interval condition is read for p_i < p_j; for i = j it would force |B_i| = 1.
  bool intervals = true;
  for (std::size_t i = 0; i < space.m(); ++i)
    for (std::size_t j = 0; j < space.m(); ++j)
      if (space.poset.less(i, j) && rep.b_sets[i].back() > rep.b_sets[j].front()) intervals = false;
  rep.combinatorial_sphere = intervals && enumerate_hom(space.poset, rep.b_sets, guards.hom_maps) == ideal.members();

  rep.pd = build_resolution(ideal, guards).pd();
  rep.pd_bound = -m;
  for (const auto& b : rep.b_sets) rep.pd_bound += static_cast<int>(b.size());
  verify(rep.pd <= rep.pd_bound, "pd exceeds sum |B_i| - m");
  rep.pd_sphere = rep.pd == rep.pd_bound;
  verify(rep.pd_sphere == rep.combinatorial_sphere, "combinatorial and pd sphere criteria disagree");
  rep.sphere = rep.pd_sphere;

  const auto& d = rep.delta.complex;
  verify(d.is_pure() && d.dim() == static_cast<int>(rep.delta.vertex.size()) - m - 1,
         "Delta(A) is not pure of dimension |V'| - m - 1");
  std::map<Face, int> ridge;
  for (Face f : d.facets())
    for (Face r = f; r; r &= r - 1) ++ridge[f & ~(r & -r)];
  for (const auto& [g, c] : ridge) verify(c <= 2, "codimension-one face " + d.face_to_string(g) + " lies in " +
                                                      std::to_string(c) + " facets");
  rep.boundary = boundary(d);

  if (certify) {
    rep.homology = certify_homology_type(d, field, guards);
    verify(rep.sphere ? rep.homology->sphere : rep.homology->ball,
           "homology certificate disagrees with the classification (" + rep.verdict() + ")" +
               (rep.homology->failure.empty() ? "" : ": " + rep.homology->failure));
    if (rep.homology->ball) verify(rep.homology->boundary == rep.boundary, "boundary mismatch");
  }
  return rep;
}

}  // namespace colp

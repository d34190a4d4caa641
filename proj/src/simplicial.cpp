#include "colp/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace colp {

namespace {

bool by_size(Face a, Face b) {
  return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
}

std::vector<Face> maximal_only(std::vector<Face> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::vector<Face> out;
  for (Face f : fs) {
    bool dominated = std::any_of(fs.begin(), fs.end(), [&](Face g) { return g != f && (f & g) == f; });
    if (!dominated) out.push_back(f);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > 64) throw InputError("simplicial complexes are limited to 64 vertices");
  const Face all = vertices_.size() == 64 ? ~Face{0} : (Face{1} << vertices_.size()) - 1;
  for (Face f : facets)
    if (f & ~all) throw InputError("facet uses a vertex outside the vertex list");
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InputError("duplicate vertex label");
  facets_ = maximal_only(std::move(facets));
}

int SimplicialComplex::dim() const {
  int d = -2;
  for (Face f : facets_) d = std::max(d, face_size(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return face_size(f) - 1 == dim(); });
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return (f & g) == f; });
}

Face SimplicialComplex::used_vertices() const {
  Face u = 0;
  for (Face f : facets_) u |= f;
  return u;
}

std::vector<Face> SimplicialComplex::faces(std::size_t cap) const {
  std::set<Face> out;
  for (Face f : facets_) {
    // Enumerate all submasks of f.
    Face s = f;
    while (true) {
      if (out.insert(s).second) check_guard(out.size() <= cap, "faces", cap);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<Face> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), by_size);
  return v;
}

std::string SimplicialComplex::face_to_string(Face f) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (f >> i & 1) {
      if (!first) s += ",";
      s += vertices_[i];
      first = false;
    }
  return s + "}";
}

std::string SimplicialComplex::to_string() const {
  std::string s;
  std::vector<Face> fs = facets_;
  std::sort(fs.begin(), fs.end(), by_size);
  for (Face f : fs) {
    bool first = true;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (f >> i & 1) {
        if (!first) s += ' ';
        s += vertices_[i];
        first = false;
      }
    s += '\n';
  }
  return s;
}

SimplicialComplex link(const SimplicialComplex& d, Face f) {
  std::vector<Face> fs;
  for (Face g : d.facets())
    if ((g & f) == f) fs.push_back(g & ~f);
  return SimplicialComplex(d.vertices(), std::move(fs));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> la(a.vertices().begin(), a.vertices().end());
  for (const auto& v : b.vertices())
    if (la.count(v)) throw InputError("join: vertex " + v + " appears in both complexes");
  std::vector<std::string> vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  const auto shift = a.vertices().size();
  std::vector<Face> fs;
  for (Face x : a.facets())
    for (Face y : b.facets()) fs.push_back(x | (y << shift));
  return SimplicialComplex(std::move(vs), std::move(fs));
}

SimplicialComplex boundary(const SimplicialComplex& d) {
  if (!d.is_pure()) throw InputError("boundary: complex is not pure");
  std::map<Face, int> count;
  for (Face f : d.facets())
    for (Face r = f; r; r &= r - 1) ++count[f & ~(r & -r)];
  std::vector<Face> fs;
  for (const auto& [g, c] : count)
    if (c == 1) fs.push_back(g);
  return SimplicialComplex(d.vertices(), std::move(fs));
}

SimplicialComplex simplex(std::vector<std::string> vertices) {
  const Face all = (Face{1} << vertices.size()) - 1;
  return SimplicialComplex(std::move(vertices), {all});
}

SimplicialComplex simplex_boundary(std::vector<std::string> vertices) {
  return boundary(simplex(std::move(vertices)));
}

std::vector<std::size_t> reduced_homology_of_faces(const std::vector<Face>& faces, FieldChoice field) {
  if (faces.empty()) return {};
  int top = -1;
  for (Face f : faces) top = std::max(top, face_size(f) - 1);
  // by_dim[d + 1] = faces of dimension d, each in ascending mask order
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
  for (Face f : faces) by_dim[static_cast<std::size_t>(face_size(f))].push_back(f);
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  verify(by_dim[0].size() == 1, "face list is missing the empty face");

  // rank[d + 1] = rank of the boundary map from dimension d to d - 1
  std::vector<SparseMatrix> maps;
  std::vector<std::size_t> dims;
  for (const auto& v : by_dim) dims.push_back(v.size());
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    const auto& src = by_dim[k];
    const auto& dst = by_dim[k - 1];
    std::unordered_map<Face, std::size_t> idx;
    for (std::size_t i = 0; i < dst.size(); ++i) idx.emplace(dst[i], i);
    SparseMatrix m(src.size(), dst.size());
    for (std::size_t r = 0; r < src.size(); ++r) {
      int pos = 0;
      for (Face rem = src[r]; rem; rem &= rem - 1, ++pos) {
        Face v = rem & -rem;
        auto it = idx.find(src[r] & ~v);
        verify(it != idx.end(), "face list is not closed under subsets");
        m.add(r, it->second, pos % 2 == 0 ? 1 : -1);
      }
    }
    maps.push_back(std::move(m));
  }
  const auto rank = chain_ranks(maps, dims, 0, field);
  std::vector<std::size_t> h(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) h[k] = by_dim[k].size() - rank[k] - rank[k + 1];
  return h;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& d, FieldChoice field, std::size_t face_cap) {
  if (d.is_void()) return {};
  return reduced_homology_of_faces(d.faces(face_cap), field);
}

bool has_sphere_homology(const std::vector<std::size_t>& h, int dim) {
  if (h.empty()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const int deg = static_cast<int>(i) - 1;
    if (h[i] != (deg == dim ? 1u : 0u)) return false;
  }
  return dim + 1 < static_cast<int>(h.size());
}

bool has_zero_homology(const std::vector<std::size_t>& h) {
  return std::all_of(h.begin(), h.end(), [](std::size_t x) { return x == 0; });
}

}  // namespace colp

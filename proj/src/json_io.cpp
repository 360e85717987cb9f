#include "symplecta/json_io.hpp"

namespace symplecta {

json subspace_to_json(const Subspace& s) {
    json rows = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) row.push_back(s.basis().at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Subspace subspace_from_json(const json& j, std::size_t ambient, Prime p) {
    std::vector<Vec> rows;
    for (const auto& row : j) {
        Vec v;
        for (const auto& e : row) v.push_back(e.get<std::uint32_t>());
        rows.push_back(std::move(v));
    }
    return Subspace::span(ambient, p, rows);
}

json matrix_to_json(const Matrix& m) {
    json flat = json::array();
    for (std::uint32_t e : m.entries()) flat.push_back(e);
    return flat;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Prime p) {
    if (j.size() != rows * cols)
        throw std::invalid_argument("matrix_from_json: wrong number of entries");
    Matrix m(rows, cols, p);
    std::size_t i = 0;
    for (const auto& e : j) {
        m.set(i / cols, i % cols, e.get<std::uint32_t>());
        ++i;
    }
    return m;
}

json group_element_to_json(const GroupElement& g) {
    return json{{"matrix", matrix_to_json(g.matrix)},
                {"kind", g.kind == GroupKind::symplectic ? "symplectic" : "similitude"},
                {"lambda", g.lambda.value()}};
}

json involution_to_json(const Involution& u) {
    return json{{"matrix", matrix_to_json(u.matrix())}, {"s_plus", subspace_to_json(u.s_plus())}};
}

json base_subset_to_json(const BaseSubsetH1& b) {
    json lines = json::array();
    for (const Subspace& l : b.lines()) lines.push_back(subspace_to_json(l));
    return lines;
}

BaseSubsetH1 base_subset_from_json(const json& j, const SymplecticSpace& space) {
    std::vector<Subspace> lines;
    for (const auto& l : j) lines.push_back(subspace_from_json(l, space.dim(), space.prime()));
    return BaseSubsetH1::create(space, std::move(lines));
}

json pair_element_to_json(const PairElement& e) {
    return json{{"s", subspace_to_json(e.s)}, {"u", subspace_to_json(e.u)}};
}

json family_to_json(const HkFamily& fam) {
    json out = json::array();
    for (std::size_t i = 0; i < fam.size(); ++i)
        out.push_back(json{{"index", i}, {"basis", subspace_to_json(fam.member(i))}});
    return out;
}

json map_to_json(const ExplicitMap& m) {
    json out = json::array();
    for (int i : m.image) out.push_back(i);
    return out;
}

}  // namespace symplecta

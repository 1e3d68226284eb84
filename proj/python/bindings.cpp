#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laundry/braid.hpp"
#include "laundry/errors.hpp"
#include "laundry/forms.hpp"
#include "laundry/fuzz.hpp"
#include "laundry/gauss.hpp"
#include "laundry/invariants.hpp"
#include "laundry/linking.hpp"
#include "laundry/moves.hpp"
#include "laundry/svg.hpp"

namespace py = pybind11;
using namespace laundry;

namespace {

using PyMat = std::vector<std::vector<long long>>;

IntMat to_mat(const PyMat& rows) {
    int n = (int)rows.size();
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if ((int)rows[i].size() != n) throw py::value_error("matrix must be square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

PyMat from_mat(const IntMat& m) {
    PyMat rows(m.rows(), std::vector<long long>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

ClosedBraidDiagram diagram(const std::string& word) {
    return ClosedBraidDiagram(parse_braid(word));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "closed braid diagrams, linking matrices and exact link invariants";

    py::register_exception<ParseError>(m, "BraidParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "MatrixValidationError", PyExc_ValueError);
    py::register_exception<MoveError>(m, "MovePatternError", PyExc_ValueError);

    m.def("b0_normal_form",
          [](const std::string& w) { return format_braid(diagram(w).word()); },
          "Canonical form of a braid word under distant commutation.");
    m.def("component_count",
          [](const std::string& w) { return component_count(parse_braid(w)); });
    m.def("encode", [](const std::string& w) { return from_mat(encode(diagram(w))); },
          "Linking matrix of a closed braid diagram, rows in laundry order.");
    m.def("decode", [](const PyMat& m_) { return format_braid(decode(to_mat(m_)).word()); });
    m.def("validate", [](const PyMat& m_) { return validate(to_mat(m_)).violations; },
          "List of violated linking-matrix rules; empty means valid.");
    m.def("correction_matrix",
          [](const std::string& w) { return from_mat(correction_matrix(diagram(w))); });
    m.def("intersection_form",
          [](const std::string& w) { return from_mat(intersection_form(diagram(w))); });
    m.def("seifert_pairing",
          [](const std::string& w) { return from_mat(seifert_pairing(diagram(w))); });
    m.def("seifert_matrix",
          [](const std::string& w) { return from_mat(seifert_matrix(diagram(w))); });
    m.def("gl_form", [](const PyMat& m_) { return from_mat(gl_form(to_mat(m_))); });
    m.def("restore_from_gl", [](const PyMat& f) { return from_mat(restore_from_gl(to_mat(f))); });

    m.def("invariants", [](const std::string& w) {
        IntMat s = seifert_matrix(diagram(w));
        LaurentPoly a = alexander(s);
        py::dict out;
        out["det"] = link_determinant(s);
        out["signature"] = link_signature(s);
        out["alexander"] = a.coeffs();
        return out;
    });
    m.def("alexander_oracle", [](const std::string& w) {
        return alexander_oracle(parse_braid(w)).coeffs();
    });

    m.def("apply_move", [](const std::string& w, const std::string& mv) {
        return format_braid(apply_braid_move(diagram(w), parse_move(mv)).word());
    });
    m.def("apply_matrix_move", [](const PyMat& m_, const std::string& mv) {
        IntMat mat = to_mat(m_);
        MoveResult res = apply_matrix_move(mat, to_matrix_move(mat, parse_move(mv)));
        py::object witness = res.witness ? py::cast(from_mat(*res.witness)) : py::none();
        return py::make_tuple(from_mat(res.matrix), witness);
    });
    m.def("verify_commuting", [](const std::string& w, const std::string& mv) {
        return verify_commuting(diagram(w), parse_move(mv));
    });

    m.def("gauss", [](const std::string& w) {
        CircleWithChords c = circle_with_chords(diagram(w));
        std::vector<std::string> endpoints;
        for (const auto& e : c.seq) endpoints.push_back(token(e));
        std::vector<std::pair<std::string, std::string>> edges;
        for (const JEdge& e : interior_first_edges(c))
            edges.push_back({token(c.seq[e.first]), token(c.seq[e.second])});
        py::dict out;
        out["chords"] = c.chords;
        out["endpoints"] = endpoints;
        out["overlap_edges"] = overlap_graph(c).edges;
        out["interior_first_edges"] = edges;
        return out;
    });
    m.def("chord_svg", [](const std::string& w) {
        return chord_diagram_svg(circle_with_chords(diagram(w)));
    });
    m.def("fuzz", [](uint64_t seed, int cases) {
        FuzzReport r = run_fuzz(seed, cases);
        return py::make_tuple(r.all_pass(), r.to_string());
    });
}

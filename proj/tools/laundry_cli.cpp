#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "laundry/braid.hpp"
#include "laundry/errors.hpp"
#include "laundry/forms.hpp"
#include "laundry/fuzz.hpp"
#include "laundry/gauss.hpp"
#include "laundry/invariants.hpp"
#include "laundry/linking.hpp"
#include "laundry/moves.hpp"
#include "laundry/svg.hpp"

namespace {

struct Input {
    std::string literal;  // positional argument; "-" reads standard input
    std::string path;     // --in

    std::string text() const {
        if (!path.empty()) {
            std::ifstream f(path);
            if (!f) throw laundry::ParseError("cannot open input file '" + path + "'");
            std::ostringstream os;
            os << f.rdbuf();
            return os.str();
        }
        if (literal.empty() || literal == "-") {
            std::ostringstream os;
            os << std::cin.rdbuf();
            return os.str();
        }
        return literal;
    }
};

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("input", in.literal, "input text, or - for standard input");
    cmd->add_option("--in", in.path, "read input from a file");
}

laundry::ClosedBraidDiagram braid_input(const Input& in) {
    return laundry::ClosedBraidDiagram(laundry::parse_braid(in.text()));
}

laundry::IntMat matrix_input(const Input& in) { return laundry::mat_from_text(in.text()); }

}  // namespace

int main(int argc, char** argv) {
    using namespace laundry;

    CLI::App app{"braid diagrams, linking matrices and their invariants"};
    app.require_subcommand(1);

    Input in;
    std::string convert_to = "gl";
    std::string move_spec, move_level = "braid", svg_out;
    bool print_witness = false;
    uint64_t fuzz_seed = 0;
    int fuzz_cases = 100;

    auto* c_encode = app.add_subcommand("encode", "braid word -> linking matrix");
    add_input(c_encode, in);
    auto* c_decode = app.add_subcommand("decode", "linking matrix -> braid word");
    add_input(c_decode, in);
    auto* c_validate = app.add_subcommand("validate", "report linking-matrix violations");
    add_input(c_validate, in);
    auto* c_convert = app.add_subcommand("convert", "braid word -> derived matrix");
    add_input(c_convert, in);
    c_convert->add_option("--to", convert_to, "mprime, gl or seifert")->required();
    auto* c_restore = app.add_subcommand("restore", "GL form -> linking matrix");
    add_input(c_restore, in);
    auto* c_move = app.add_subcommand("move", "apply a move at braid or matrix level");
    add_input(c_move, in);
    c_move->add_option("--move", move_spec, "move specification")->required();
    c_move->add_option("--level", move_level, "braid or matrix (default braid)");
    c_move->add_flag("--witness", print_witness, "also print the congruence witness");
    auto* c_inv = app.add_subcommand("invariants", "determinant, signature, Alexander polynomial");
    add_input(c_inv, in);
    auto* c_gauss = app.add_subcommand("gauss", "chord diagram, overlap graph, interior first-edges");
    add_input(c_gauss, in);
    auto* c_svg = app.add_subcommand("svg", "render the chord diagram");
    add_input(c_svg, in);
    c_svg->add_option("--out", svg_out, "output SVG path")->required();
    auto* c_round = app.add_subcommand("roundtrip", "check decode(encode(braid)) = braid");
    add_input(c_round, in);
    auto* c_fuzz = app.add_subcommand("fuzz", "run the property suite on random diagrams");
    c_fuzz->add_option("--seed", fuzz_seed, "random seed")->required();
    c_fuzz->add_option("--cases", fuzz_cases, "number of cases (default 100)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_encode->parsed()) {
            std::cout << to_text(encode(braid_input(in)));
        } else if (c_decode->parsed()) {
            std::cout << format_braid(decode(matrix_input(in)).word()) << '\n';
        } else if (c_validate->parsed()) {
            ValidityReport r = validate(matrix_input(in));
            if (r.valid()) {
                std::cout << "valid\n";
            } else {
                std::cout << "invalid:\n";
                for (const auto& v : r.violations) std::cout << "  - " << v << '\n';
            }
        } else if (c_convert->parsed()) {
            ClosedBraidDiagram d = braid_input(in);
            if (convert_to == "mprime") std::cout << to_text(seifert_pairing(d));
            else if (convert_to == "gl") std::cout << to_text(gl_form(encode(d)));
            else if (convert_to == "seifert") std::cout << to_text(seifert_matrix(d));
            else throw ParseError("--to must be mprime, gl or seifert");
        } else if (c_restore->parsed()) {
            std::cout << to_text(restore_from_gl(matrix_input(in)));
        } else if (c_move->parsed()) {
            BraidMoveSpec mv = parse_move(move_spec);
            if (move_level == "braid") {
                std::cout << format_braid(apply_braid_move(braid_input(in), mv).word()) << '\n';
            } else if (move_level == "matrix") {
                IntMat m = matrix_input(in);
                MoveResult res = apply_matrix_move(m, to_matrix_move(m, mv));
                std::cout << to_text(res.matrix);
                if (print_witness) {
                    if (res.witness)
                        std::cout << "witness det=" << res.witness->det() << '\n'
                                  << to_text(*res.witness);
                    else
                        std::cout << "witness none\n";
                }
            } else {
                throw ParseError("--level must be braid or matrix");
            }
        } else if (c_inv->parsed()) {
            IntMat s = seifert_matrix(braid_input(in));
            std::cout << "det=" << link_determinant(s) << " sig=" << link_signature(s)
                      << " alexander=" << alexander(s).to_string() << '\n';
        } else if (c_gauss->parsed()) {
            CircleWithChords c = circle_with_chords(braid_input(in));
            std::cout << to_text(c);
            OverlapGraph g = overlap_graph(c);
            std::cout << "overlap:";
            for (auto [i, j] : g.edges) std::cout << ' ' << i << '-' << j;
            std::cout << '\n' << "interior-first-edges:";
            bool first = true;
            for (const JEdge& e : interior_first_edges(c)) {
                std::cout << (first ? " " : ", ") << token(c.seq[e.first]) << ' '
                          << token(c.seq[e.second]);
                first = false;
            }
            std::cout << '\n';
        } else if (c_svg->parsed()) {
            std::ofstream f(svg_out);
            if (!f) throw ParseError("cannot open output file '" + svg_out + "'");
            f << chord_diagram_svg(circle_with_chords(braid_input(in)));
        } else if (c_round->parsed()) {
            ClosedBraidDiagram d = braid_input(in);
            IntMat m = encode(d);
            if (!(decode(m) == d) || encode(decode(m)) != m)
                throw InternalError("round trip failed");
            std::cout << "roundtrip ok: " << format_braid(d.word()) << '\n';
        } else if (c_fuzz->parsed()) {
            FuzzReport rep = run_fuzz(fuzz_seed, fuzz_cases);
            std::cout << rep.to_string();
            if (!rep.all_pass()) return 2;
        }
    } catch (const laundry::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << '\n';
        return 1;
    } catch (const laundry::ValidationError& e) {
        std::cerr << "error: invalid matrix\n";
        for (const auto& v : e.violations) std::cerr << "  - " << v << '\n';
        return 1;
    } catch (const laundry::MoveError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const laundry::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "ncm/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ncm/beta.hpp"
#include "ncm/determinants.hpp"
#include "ncm/ks.hpp"
#include "ncm/lattice.hpp"
#include "ncm/master.hpp"
#include "ncm/relations.hpp"
#include "ncm/report.hpp"

namespace ncm::cli {

namespace {

TypeVector parse_int_list(const std::string& text) {
    TypeVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer list: " + text);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

int emit_report(const VerificationReport& report, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
    nlohmann::json j = report.to_json();
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) {
            err << "cannot open " << out_path << " for writing\n";
            return 2;
        }
        file << j.dump(2) << "\n";
        out << report.summary();
    }
    return report.pass ? 0 : 1;
}

struct SelfCheck {
    std::string name;
    bool ok;
};

std::vector<SelfCheck> worked_example_suite() {
    std::vector<SelfCheck> out;

    {
        Word o = Word::parse(
            "a13,a11,a12,a13,a22,a23,a22,a21,a23,a22,a23,a32,a31,a31,a33,a32,a32,a33,a33");
        Word p = Word::parse(
            "a13,a32,a22,a23,a31,a11,a12,a22,a21,a13,a31,a23,a33,a32,a22,a23,a32,a33,a33");
        PhiResult chain = phi(o, 3);
        out.push_back({"sorting the type (4,7,8) o-sequence takes 33 switches",
                       chain.switches == 33 && chain.p_sequence == p &&
                           phi_inverse(p, 3) == o});
    }
    out.push_back({"inversion counts 10 and 16",
                   inv({1, 3, 2, 4, 3, 1, 2, 3, 4, 4}) == 10 &&
                       inv({3, 2, 4, 3, 1, 1, 2, 4, 4, 3}) == 16});
    {
        Word p = Word::parse("a13,a32,a24,a43,a31,a11,a22,a34,a44,a43");
        long drop = inv(p.col_word()) - inv(p.row_word());
        bool ok = primitive_parts(p, 4).size() == 4 && drop == 6 &&
                  drop == static_cast<long>(p.degree()) - 4;
        out.push_back({"the length-10 closed-path word splits into 4 primitive paths "
                       "with weight q^6",
                       ok});
    }
    {
        Series det = determinant(SymbolicMatrix::letters(3, 2).minor_at(0, 0), DetFlavor::Qij);
        Series expected(2);
        expected.add_term(Word::parse("a22,a33"), Coefficient(1));
        expected.add_term(Word::parse("a32,a23"),
                          Coefficient::monomial(Param::qij(2, 3), -1, Rational(-1)));
        out.push_back({"rows-and-columns {2,3} minor determinant", det == expected});
    }
    {
        Series det = determinant(SymbolicMatrix::letters(2, 2), DetFlavor::Super, {1, 1});
        Series expected(2);
        expected.add_term(Word::parse("a11,a22"), Coefficient(1));
        expected.add_term(Word::parse("a21,a12"), Coefficient(1));
        out.push_back({"all-odd super-determinant is the permanent", det == expected});
    }
    out.push_back({"the balanced word a11,a13,a22,a31 has 6 two-part cuts",
                   count_beta_preimages(Word::parse("a11,a13,a22,a31"), 3, 2) == 6});
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification of the MacMahon master identities and their "
                 "non-commutative extensions"};
    app.require_subcommand(1);

    // verify ...
    CLI::App* verify = app.add_subcommand("verify", "verify an identity and emit a report");
    verify->require_subcommand(1);

    std::string class_name = "right-quantum";
    std::string gamma_text;
    std::string out_path;
    int m = 2;
    int max_degree = 3;
    int q_points = 3;
    bool symbolic = false;
    int beta = 1;
    bool beta_commutative = false;
    std::string k_text;

    auto add_common = [&](CLI::App* cmd, bool with_class) {
        if (with_class)
            cmd->add_option("--class", class_name,
                            "matrix class: commutative, cartier-foata, right-quantum, "
                            "q-cartier-foata, q-right-quantum, qij-cartier-foata, "
                            "qij-right-quantum, super:<digits>");
        cmd->add_option("--m", m, "matrix size")->required();
        cmd->add_option("--q-points", q_points, "instantiation rounds per parameter");
        cmd->add_flag("--symbolic", symbolic,
                      "decide membership over fractions instead of test points");
        cmd->add_option("--out", out_path, "write the JSON report to this path");
    };

    CLI::App* v_master = verify->add_subcommand("master", "master identity");
    add_common(v_master, true);
    v_master->add_option("--max-degree", max_degree, "truncation degree")->required();
    v_master->add_option("--gamma", gamma_text,
                         "parity digits for --class super, e.g. --gamma 011");

    CLI::App* v_quasidet =
        verify->add_subcommand("quasidet", "top-left quasideterminant identity");
    add_common(v_quasidet, true);
    v_quasidet->add_option("--max-degree", max_degree, "truncation degree")->required();

    CLI::App* v_beta = verify->add_subcommand("beta", "exponentiated master identity");
    add_common(v_beta, false);
    v_beta->add_option("--max-degree", max_degree, "truncation degree")->required();
    v_beta->add_option("--beta", beta, "positive integer exponent")->required();
    v_beta->add_flag("--commutative", beta_commutative,
                     "check the commutative collapse instead of ideal membership");

    CLI::App* v_ks = verify->add_subcommand("ks", "q-shift operator identity");
    v_ks->add_option("--m", m, "matrix size")->required();
    v_ks->add_option("--k", k_text, "comma-separated type vector, e.g. 2,1")->required();
    v_ks->add_option("--out", out_path, "write the JSON report to this path");

    CLI::App* v_detlemmas =
        verify->add_subcommand("detlemmas", "determinant row/column lemmas");
    add_common(v_detlemmas, true);

    // biject
    CLI::App* biject = app.add_subcommand("biject", "print the sorting chain of a word");
    std::string word_text;
    int biject_m = 0;
    biject->add_option("--word", word_text, "word, e.g. a12,a21")->required();
    biject->add_option("--m", biject_m, "matrix size (default: largest height used)");

    // enumerate
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list sequences of a type");
    std::string kind_text = "o";
    std::string type_text;
    int enum_m = 0;
    long rank = 0;
    enumerate_cmd->add_option("--kind", kind_text, "balanced, o, p, or q")->required();
    enumerate_cmd->add_option("--type", type_text, "comma-separated type vector")->required();
    enumerate_cmd->add_option("--m", enum_m, "matrix size (default: type length)");
    enumerate_cmd->add_option("--rank", rank, "chain-state rank slice for --kind q");

    // selftest
    CLI::App* selftest = app.add_subcommand("selftest", "run the pinned example checks");
    bool paper_examples = false;
    selftest->add_flag("--paper-examples", paper_examples,
                       "run the worked-example suite (the default and only suite)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ncmaster");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        MembershipOptions opts;
        opts.q_points = q_points;
        opts.symbolic = symbolic;

        if (v_master->parsed()) {
            if (!gamma_text.empty()) {
                if (class_name != "super")
                    throw std::invalid_argument("--gamma requires --class super");
                // accept both "011" and "0,1,1"
                std::string digits;
                for (char ch : gamma_text)
                    if (ch != ',') digits += ch;
                class_name = "super:" + digits;
            }
            MatrixClass cls = MatrixClass::parse(class_name);
            return emit_report(verify_master(cls, m, max_degree, opts), out_path, out, err);
        }
        if (v_quasidet->parsed()) {
            MatrixClass cls = MatrixClass::parse(class_name);
            return emit_report(verify_quasidet(cls, m, max_degree, opts), out_path, out,
                               err);
        }
        if (v_beta->parsed()) {
            VerificationReport report =
                beta_commutative ? verify_fz_commutative(m, max_degree, beta, opts)
                                 : verify_beta_noncommutative(m, max_degree, beta, opts);
            return emit_report(report, out_path, out, err);
        }
        if (v_ks->parsed()) {
            return emit_report(verify_ks(m, parse_int_list(k_text), opts), out_path, out,
                               err);
        }
        if (v_detlemmas->parsed()) {
            MatrixClass cls = MatrixClass::parse(class_name);
            return emit_report(verify_detlemmas(cls, m, opts), out_path, out, err);
        }
        if (biject->parsed()) {
            Word w = Word::parse(word_text);
            int size = biject_m > 0 ? biject_m : std::max(1, w.max_index());
            Classification c = classify(w, size);
            if (!c.q_sequence)
                throw std::invalid_argument(
                    "the word is not a chain state of the sorting process");
            Word cur = w;
            while (true) {
                Classification cc = classify(cur, size);
                out << cur.str() << " rank=" << cc.rank << "\n";
                if (cc.p_sequence) break;
                cur = psi_step(cur, size);
            }
            return 0;
        }
        if (enumerate_cmd->parsed()) {
            TypeVector type = parse_int_list(type_text);
            int size = enum_m > 0 ? enum_m : static_cast<int>(type.size());
            SequenceKind kind;
            if (kind_text == "balanced" || kind_text == "b")
                kind = SequenceKind::Balanced;
            else if (kind_text == "o")
                kind = SequenceKind::OSequence;
            else if (kind_text == "p")
                kind = SequenceKind::PSequence;
            else if (kind_text == "q")
                kind = SequenceKind::QSequence;
            else
                throw std::invalid_argument("unknown kind: " + kind_text);
            for (const Word& w : enumerate_sequences(kind, type, size, rank))
                out << w.str() << "\n";
            return 0;
        }
        if (selftest->parsed()) {
            bool all = true;
            for (const SelfCheck& check : worked_example_suite()) {
                out << (check.ok ? "ok   " : "FAIL ") << check.name << "\n";
                all = all && check.ok;
            }
            out << (all ? "selftest passed" : "selftest FAILED") << "\n";
            return all ? 0 : 1;
        }
    } catch (const guard_error& e) {
        err << "guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace ncm::cli

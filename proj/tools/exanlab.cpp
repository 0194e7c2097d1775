// exanlab: JSON-in/JSON-out front end for the extension-algebra library.
// Exit codes: 0 success or true verdict, 1 well-formed negative verdict,
// 2 input error, 3 size-guard error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exanlab/io.hpp"
#include "exanlab/kodaira.hpp"

using nlohmann::json;
using namespace exanlab;

namespace {

struct Outcome {
    json report;
    int exit_code = 0;
};

InputDocument load(const std::vector<std::string>& files) {
    std::vector<InputDocument> docs;
    for (const std::string& path : files) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw InputError("malformed JSON in " + path + ": " + e.what());
        }
        docs.push_back(parse_document(j));
    }
    return merge_documents(docs);
}

const Algebra& need_algebra(const InputDocument& doc) {
    if (!doc.algebra) throw InputError("this command needs an 'algebra' section");
    return *doc.algebra;
}
const Bimodule& need_bimodule(const InputDocument& doc) {
    if (!doc.bimodule) throw InputError("this command needs a 'bimodule' section");
    return *doc.bimodule;
}
const LeftModule& need_module(const InputDocument& doc) {
    if (!doc.module) throw InputError("this command needs a 'module' section");
    return *doc.module;
}
const ExtensionAlgebra& need_extension(const InputDocument& doc) {
    if (!doc.extension) throw InputError("this command needs an 'extension' section");
    return *doc.extension;
}
const Cochain& need_cochain(const InputDocument& doc, std::size_t index = 0) {
    if (doc.cochains.size() <= index)
        throw InputError("this command needs " + std::to_string(index + 1) + " 'cochain' section(s)");
    return doc.cochains[index];
}

void check_valid_inputs(const InputDocument& doc) {
    if (doc.algebra) {
        const ValidationReport rep = validate_algebra(*doc.algebra);
        if (!rep.ok()) throw InputError("invalid algebra: " + rep.violations.front());
        if (doc.bimodule) {
            const ValidationReport brep = validate_bimodule(*doc.algebra, *doc.bimodule);
            if (!brep.ok()) throw InputError("invalid bimodule: " + brep.violations.front());
        }
        if (doc.module) {
            const ValidationReport mrep = validate_left_module(*doc.algebra, *doc.module);
            if (!mrep.ok()) throw InputError("invalid module: " + mrep.violations.front());
        }
    }
}

void write_output(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

json cochain_report(const Cochain& c) { return cochain_to_json(c); }

Matrix pick_derivation(const Algebra& a, const Bimodule& im, const InputDocument& doc,
                       long index) {
    // an explicit degree-1 cochain section wins; otherwise pick from the
    // derivation space (zero map if the space is trivial)
    for (const Cochain& c : doc.cochains)
        if (c.degree == 1) {
            if (c.mat.rows() != im.dim || c.mat.cols() != a.dim)
                throw InputError("degree-1 cochain has the wrong shape for a derivation");
            for (std::size_t i = 0; i < a.dim; ++i)
                for (std::size_t j = 0; j < a.dim; ++j) {
                    const Vector lhs = c.mat * a.basis_product(i, j);
                    const Vector rhs = im.left[i] * c.mat.column(j) + im.right[j] * c.mat.column(i);
                    if (!(lhs == rhs))
                        throw InputError("supplied degree-1 cochain is not a derivation");
                }
            return c.mat;
        }
    const std::vector<Matrix> space = derivation_space(a, im);
    if (space.empty()) return Matrix(a.field, im.dim, a.dim);
    if (index < 0 || static_cast<std::size_t>(index) >= space.size())
        throw InputError("derivation index out of range; space has dimension " +
                         std::to_string(space.size()));
    return space[static_cast<std::size_t>(index)];
}

Outcome cmd_validate(const InputDocument& doc) {
    json violations = json::array();
    auto absorb = [&](const ValidationReport& rep) {
        for (const std::string& v : rep.violations) violations.push_back(v);
    };
    bool saw_section = false;
    if (doc.algebra) {
        saw_section = true;
        absorb(validate_algebra(*doc.algebra));
        if (doc.bimodule) absorb(validate_bimodule(*doc.algebra, *doc.bimodule));
        if (doc.module) absorb(validate_left_module(*doc.algebra, *doc.module));
    } else if (doc.bimodule || doc.module) {
        throw InputError("bimodule/module sections need an algebra to validate against");
    }
    if (doc.extension) {
        saw_section = true;
        absorb(validate_extension(*doc.extension));
        if (doc.extension->cocycle) {
            const Section s = choose_section(*doc.extension);
            const ExtractedCocycle ext = extract_cocycle(*doc.extension, s);
            if (!is_cocycle(ext.base, ext.induced, *doc.extension->cocycle).ok)
                violations.push_back("stored cocycle fails the cocycle condition");
        }
    }
    if (!saw_section) throw InputError("nothing to validate");
    const bool ok = violations.empty();
    return {{{"verdict", ok}, {"violations", violations}}, ok ? 0 : 1};
}

Outcome cmd_center(const InputDocument& doc) {
    const Algebra& a = need_algebra(doc);
    const std::vector<Vector> z = center(a);
    json basis = json::array();
    for (const Vector& v : z) basis.push_back(vector_to_json(v));
    return {{{"dims", {{"center", z.size()}}}, {"basis", basis}}, 0};
}

Outcome cmd_derivations(const InputDocument& doc) {
    const std::vector<Matrix> der = derivations(need_algebra(doc), need_bimodule(doc));
    json basis = json::array();
    for (const Matrix& d : der) basis.push_back(matrix_to_json(d));
    return {{{"dims", {{"der", der.size()}}}, {"basis", basis}}, 0};
}

Outcome cmd_hh(const InputDocument& doc, int degree) {
    const Cohomology h = cohomology(need_algebra(doc), need_bimodule(doc), degree);
    json basis = json::array();
    for (const Cochain& c : h.representatives) basis.push_back(cochain_report(c));
    return {{{"dims",
              {{"dim_HH", h.dim}, {"kernel", h.kernel_dim}, {"image", h.image_dim}}},
             {"basis", basis}},
            0};
}

Outcome cmd_exan(const InputDocument& doc) {
    const ExanBasis basis = exan_basis(need_algebra(doc), need_bimodule(doc));
    json exan = json::array(), inner = json::array();
    for (const Cochain& c : basis.exan) exan.push_back(cochain_report(c));
    for (const Cochain& c : basis.inner) inner.push_back(cochain_report(c));
    return {{{"dims",
              {{"exan", basis.exan.size()},
               {"inner", basis.inner.size()},
               {"dim_HH2", basis.hh2_dim}}},
             {"basis", {{"exan", exan}, {"inner", inner}}}},
            0};
}

Outcome cmd_extend(const InputDocument& doc, const std::string& out_path) {
    const Algebra& a = need_algebra(doc);
    const Bimodule& im = need_bimodule(doc);
    const Cochain& c = need_cochain(doc);
    try {
        const ExtensionAlgebra b = build_extension(a, im, c);
        if (!out_path.empty())
            write_output(out_path, json{{"field", field_to_json(a.field)},
                                        {"extension", extension_to_json(b)}});
        return {{{"verdict", true}, {"dims", {{"extension", b.algebra.dim}}}}, 0};
    } catch (const NotACocycleError& e) {
        return {{{"verdict", false},
                 {"witness", {{"violating_triple", e.triple}}},
                 {"reason", e.what()}},
                1};
    }
}

Outcome cmd_section_extract(const InputDocument& doc, unsigned seed, const std::string& out_path) {
    const ExtensionAlgebra& b = need_extension(doc);
    const Section s = choose_section(b, seed);
    const ExtractedCocycle ext = extract_cocycle(b, s);
    if (!out_path.empty())
        write_output(out_path, json{{"field", field_to_json(b.algebra.field)},
                                    {"algebra", algebra_to_json(ext.base)},
                                    {"bimodule", bimodule_to_json(ext.induced)},
                                    {"cochain", cochain_to_json(ext.cocycle)}});
    return {{{"verdict", true},
             {"section", matrix_to_json(s.map)},
             {"cochain", cochain_to_json(ext.cocycle)},
             {"bimodule", bimodule_to_json(ext.induced)}},
            0};
}

Outcome cmd_equiv(const InputDocument& doc, const std::string& mode) {
    const Algebra& a = need_algebra(doc);
    const Bimodule& im = need_bimodule(doc);
    const Cochain& c1 = need_cochain(doc, 0);
    const Cochain& c2 = need_cochain(doc, 1);
    const EquivMode m = mode == "strict" ? EquivMode::strict : EquivMode::inner;
    const EquivResult r = equiv(a, im, c1, c2, m);
    json rep{{"verdict", r.equivalent}, {"mode", mode}};
    if (r.witness) rep["witness"] = cochain_to_json(*r.witness);
    return {rep, r.equivalent ? 0 : 1};
}

Outcome cmd_caction(const InputDocument& doc, const std::string& element, const std::string& side) {
    const Algebra& a = need_algebra(doc);
    const Bimodule& im = need_bimodule(doc);
    const Cochain& c = need_cochain(doc);
    json coords;
    try {
        coords = json::parse(element);
    } catch (const json::parse_error&) {
        throw InputError("--element must be a JSON array of scalar strings");
    }
    const Vector z = parse_vector(a.field, coords, a.dim);
    const Cochain out = caction(a, im, z, c, side == "left" ? Side::left : Side::right);
    return {{{"verdict", true}, {"cochain", cochain_to_json(out)}}, 0};
}

Outcome cmd_quotient(const InputDocument& doc, const std::string& out_path) {
    const ExtensionAlgebra& b = need_extension(doc);
    const QuotientExtension q = quotient_extension(b);
    if (!out_path.empty())
        write_output(out_path, json{{"field", field_to_json(b.algebra.field)},
                                    {"extension", extension_to_json(q.quotient)}});
    return {{{"dims",
              {{"ideal_closure", q.ideal_closure.size()},
               {"quotient_ideal", q.quotient.ideal_dim},
               {"quotient", q.quotient.algebra.dim}}},
             {"verdict", true}},
            0};
}

Outcome cmd_jet(const InputDocument& doc, long derivation_index) {
    const Algebra& a = need_algebra(doc);
    const Bimodule& im = need_bimodule(doc);
    const LeftModule& e = need_module(doc);
    const Cochain* deg2 = nullptr;
    for (const Cochain& c : doc.cochains)
        if (c.degree == 2) { deg2 = &c; break; }
    if (!deg2) throw InputError("jet needs a degree-2 cochain section");
    const Matrix d = pick_derivation(a, im, doc, derivation_index);
    const JetVerdict v = jet_action(a, im, e, *deg2, d);
    if (v.module.associative != v.criterion_zero)
        throw InternalError("jet associativity verdict disagrees with the tensor criterion");
    return {{{"module_ok", v.module.associative},
             {"criterion_ok", v.criterion_zero},
             {"verdict", v.module.associative},
             {"dims",
              {{"tensor", v.tensor.dim},
               {"jet", v.module.dim},
               {"module", e.dim},
               {"ideal", im.dim}}}},
            v.module.associative ? 0 : 1};
}

Outcome cmd_kahler(const InputDocument& doc) {
    const KaehlerData k = kaehler(need_algebra(doc));
    const bool ok = k.sequence_exact && k.splitting_ok && k.product_formula_ok && k.leibniz_ok;
    return {{{"verdict", ok},
             {"dims",
              {{"omega1", k.omega1.size()},
               {"pr1", k.pr1.dim},
               {"diagonal_ideal", k.diagonal_ideal.size()},
               {"ideal_squared", k.ideal_squared.size()}}},
             {"checks",
              {{"sequence_exact", k.sequence_exact},
               {"splitting_ok", k.splitting_ok},
               {"product_formula_ok", k.product_formula_ok},
               {"leibniz_ok", k.leibniz_ok}}},
             {"universal_derivation", matrix_to_json(k.universal_derivation)}},
            ok ? 0 : 1};
}

Outcome cmd_connection(const InputDocument& doc, long derivation_index) {
    const Algebra& a = need_algebra(doc);
    const LeftModule& e = need_module(doc);
    const Bimodule& fmod = need_bimodule(doc);
    const Matrix d = pick_derivation(a, fmod, doc, derivation_index);
    const auto nabla = connection_exists(a, e, fmod, d);
    json rep{{"verdict", nabla.has_value()}};
    if (nabla) rep["witness"] = matrix_to_json(*nabla);
    return {rep, nabla ? 0 : 1};
}

Outcome cmd_ks(const InputDocument& doc) {
    const Algebra& a = need_algebra(doc);
    const KSReport r = ks_map(a, need_module(doc));
    const bool ok = r.f_kills_d0 && r.dim_identity;
    return {{{"dims",
              {{"dim_D1", r.dim_d1},
               {"dim_Der", r.dim_der},
               {"dim_Ext1", r.dim_ext1},
               {"dim_VM", r.vm_basis.size()}}},
             {"g", matrix_to_json(r.g)},
             {"checks", {{"f_kills_D0", r.f_kills_d0}, {"dim_identity", r.dim_identity}}},
             {"verdict", ok}},
            ok ? 0 : 1};
}

Outcome cmd_twist_check(const InputDocument& doc) {
    const Algebra& a = need_algebra(doc);
    const LeftModule& m = need_module(doc);
    const KSReport r = ks_map(a, m);
    const BracketVerdict bracket = bracket_closure(a, m, r);
    const TwistCheck t = twist_module_check(a, m, r);
    const bool ok = bracket.closed && bracket.witnesses_ok && t.vm_a_closed && t.l_a_linear &&
                    t.l_law && t.twisted_associative && t.lr3_exists;
    return {{{"dim_D1", r.dim_d1},
             {"dim_Der", r.dim_der},
             {"dim_Ext1", r.dim_ext1},
             {"dim_VM", r.vm_basis.size()},
             {"bracket_closed", bracket.closed && bracket.witnesses_ok},
             {"splitting_exists", t.splitting_exists},
             {"checks",
              {{"vm_a_closed", t.vm_a_closed},
               {"l_a_linear", t.l_a_linear},
               {"l_law", t.l_law},
               {"twisted_associative", t.twisted_associative},
               {"lr3_exists", t.lr3_exists}}},
             {"verdict", ok}},
            ok ? 0 : 1};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with square-zero extensions, Hochschild cohomology, "
                 "jets and Kodaira-Spencer maps"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_path, mode = "inner", side = "left", element;
    std::string cocycle_file;
    int degree = 2;
    long derivation_index = 0;
    unsigned seed = 0;

    auto add_files = [&](CLI::App* cmd) {
        cmd->add_option("files", files, "input JSON documents (sections are merged in order)")
            ->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "check axioms of all sections present");
    add_files(validate);
    CLI::App* centerc = app.add_subcommand("center", "basis of the center C(A)");
    add_files(centerc);
    CLI::App* deriv = app.add_subcommand("derivations", "basis of Der_k(A, I)");
    add_files(deriv);
    CLI::App* hh = app.add_subcommand("hh", "Hochschild cohomology HH^p(A, I)");
    add_files(hh);
    hh->add_option("--degree", degree, "cohomology degree (0, 1 or 2)")
        ->check(CLI::Range(0, 2));
    CLI::App* exan = app.add_subcommand("exan", "cocycle and coboundary bases with dim HH^2");
    add_files(exan);
    CLI::App* extend = app.add_subcommand("extend", "build the extension I +^C A from a cocycle");
    add_files(extend);
    extend->add_option("--cocycle", cocycle_file, "extra file holding the cocycle section");
    extend->add_option("-o,--output", out_path, "write the extension document here");
    CLI::App* sx = app.add_subcommand("section-extract",
                                      "choose a section and extract its cocycle and bimodule");
    add_files(sx);
    sx->add_option("--seed", seed, "section variant (0 = canonical echelon section)");
    sx->add_option("-o,--output", out_path, "write the extracted context document here");
    CLI::App* eq = app.add_subcommand("equiv", "compare two cocycles");
    add_files(eq);
    eq->add_option("--mode", mode, "strict or inner")
        ->check(CLI::IsMember({"strict", "inner"}));
    CLI::App* ca = app.add_subcommand("caction", "act by a central element on a cocycle");
    add_files(ca);
    ca->add_option("--element", element, "central element as a JSON array of scalar strings")
        ->required();
    ca->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    CLI::App* quot = app.add_subcommand("quotient", "quotient D^C by the closure of Im(C)");
    add_files(quot);
    quot->add_option("-o,--output", out_path, "write the quotient extension document here");
    CLI::App* jet = app.add_subcommand("jet", "first-order jet module criterion");
    add_files(jet);
    jet->add_option("--derivation-index", derivation_index,
                    "which derivation basis vector to use when no degree-1 cochain is given");
    CLI::App* kah = app.add_subcommand("kahler", "Kaehler differentials and first-order jets");
    add_files(kah);
    CLI::App* conn = app.add_subcommand("connection", "solve for a connection E -> F tensor_A E");
    add_files(conn);
    conn->add_option("--derivation-index", derivation_index,
                     "which derivation basis vector to use when no degree-1 cochain is given");
    CLI::App* ks = app.add_subcommand("ks", "non-commutative Kodaira-Spencer report");
    add_files(ks);
    CLI::App* twist = app.add_subcommand("twist-check", "Lie-Rinehart kernel and twisted module checks");
    add_files(twist);

    CLI11_PARSE(app, argc, argv);

    const CLI::App* active = app.get_subcommands().front();
    json report;
    int code = 0;
    try {
        if (!cocycle_file.empty()) files.push_back(cocycle_file);
        const InputDocument doc = load(files);
        Outcome outcome{{}, 0};
        if (active == validate) {
            outcome = cmd_validate(doc);
        } else {
            // the cochain-space guard fires before any expensive validation
            if (active == hh) cochain_cols(need_algebra(doc), need_bimodule(doc), degree + 1);
            if (active == exan) cochain_cols(need_algebra(doc), need_bimodule(doc), 3);
            // every other command assumes well-formed inputs
            check_valid_inputs(doc);
            if (active == centerc) outcome = cmd_center(doc);
            else if (active == deriv) outcome = cmd_derivations(doc);
            else if (active == hh) outcome = cmd_hh(doc, degree);
            else if (active == exan) outcome = cmd_exan(doc);
            else if (active == extend) outcome = cmd_extend(doc, out_path);
            else if (active == sx) outcome = cmd_section_extract(doc, seed, out_path);
            else if (active == eq) outcome = cmd_equiv(doc, mode);
            else if (active == ca) outcome = cmd_caction(doc, element, side);
            else if (active == quot) outcome = cmd_quotient(doc, out_path);
            else if (active == jet) outcome = cmd_jet(doc, derivation_index);
            else if (active == kah) outcome = cmd_kahler(doc);
            else if (active == conn) outcome = cmd_connection(doc, derivation_index);
            else if (active == ks) outcome = cmd_ks(doc);
            else if (active == twist) outcome = cmd_twist_check(doc);
        }
        report = std::move(outcome.report);
        code = outcome.exit_code;
        report["command"] = active->get_name();
        report["field"] = field_to_json(doc.field);
    } catch (const SizeGuardError& e) {
        report = {{"command", active->get_name()}, {"error", e.what()}};
        code = 3;
    } catch (const InputError& e) {
        report = {{"command", active->get_name()}, {"error", e.what()}};
        code = 2;
    } catch (const MathDomainError& e) {
        report = {{"command", active->get_name()}, {"error", e.what()}};
        code = 2;
    } catch (const std::exception& e) {
        report = {{"command", active->get_name()}, {"error", std::string("internal: ") + e.what()}};
        code = 2;
    }
    std::cout << report.dump(2) << "\n";
    return code;
}

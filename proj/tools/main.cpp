// semicell: exact seminormal forms, Gram determinants and block
// decompositions for cellular algebras with Jucys-Murphy elements.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "semicell/blocks.hpp"
#include "semicell/json_io.hpp"
#include "semicell/seminormal.hpp"
#include "semicell/triangular.hpp"

using namespace semicell;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    std::string algebra = "hecke";
    std::string field = "Q";
    std::string q_text;
    std::string contents_text;
    std::string spec_file;
    std::string input_file;
    std::string format = "table";
    int n = 3;
    unsigned long seed = 12345;
    int random_trials = 0;
    bool force_gates = false;
    std::string dvr_q;
};

bool gates_overridden(const Options& opt) {
    if (opt.force_gates) return true;
    const char* env = std::getenv("SEMICELL_FORCE_GATES");
    return env && std::string(env) == "1";
}

FieldPtr parse_field(const std::string& text) {
    if (text == "q-generic") return Field::rational_functions(Field::rationals(), "q");
    return field_from_json(json(text));
}

Instance resolve_instance(const Options& opt) {
    if (!opt.spec_file.empty()) {
        std::ifstream in(opt.spec_file);
        if (!in) throw error("cannot open spec file '" + opt.spec_file + "'");
        json j = json::parse(in);
        return instance_from_json(j, gates_overridden(opt));
    }
    FieldPtr f = parse_field(opt.field);
    if (opt.algebra == "toy") {
        std::vector<Scalar> contents;
        std::string tok;
        std::istringstream ss(opt.contents_text);
        while (std::getline(ss, tok, ',')) contents.push_back(Scalar::parse(tok, f));
        if (contents.empty()) throw error("toy algebra needs --contents c1,c2,...");
        return build_toy(contents);
    }
    if (opt.algebra == "matrix") return build_matrix_algebra(opt.n, f);
    if (opt.algebra == "hecke") {
        Scalar q = opt.q_text.empty()
                       ? (f->tag() == FieldTag::RatFunc ? Scalar::variable(f) : Scalar::one(f))
                       : Scalar::parse(opt.q_text, f);
        return build_hecke(opt.n, f, q, gates_overridden(opt));
    }
    throw error("unknown algebra '" + opt.algebra + "'");
}

void emit(const Options& opt, const json& doc, const std::string& table) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << table;
}

int report_exit(const CheckReport& report) { return report.all_pass() ? 0 : 1; }

int run_gram(const Options& opt) {
    Instance inst = resolve_instance(opt);
    const CellDatum& d = *inst.datum;
    json lambdas = json::array();
    std::ostringstream table;
    for (int lam = 0; lam < d.num_lambdas(); ++lam) {
        SeminormalData data = seminormal_data(inst.content, lam);
        Scalar det = gram_determinant(inst.content, lam);
        json gammas = json::array();
        table << "lambda " << d.lambda_name(lam) << "\n";
        for (int t = 0; t < d.tableau_count(lam); ++t) {
            gammas.push_back(json{{"tableau", d.tableau_name(lam, t)},
                                  {"gamma", scalar_to_json(data.gammas[static_cast<size_t>(t)])}});
            table << "  gamma[" << d.tableau_name(lam, t)
                  << "] = " << data.gammas[static_cast<size_t>(t)].to_string() << "\n";
        }
        table << "  G" << d.lambda_name(lam) << " = " << det.to_string() << "\n";
        lambdas.push_back(json{{"lambda", d.lambda_name(lam)},
                               {"gammas", gammas},
                               {"gram_determinant", scalar_to_json(det)}});
    }
    json doc{{"schema_version", kSchemaVersion},
             {"command", "gram"},
             {"field", field_to_json(d.field())},
             {"lambdas", lambdas}};
    emit(opt, doc, table.str());
    return 0;
}

int run_seminormal(const Options& opt) {
    Instance inst = resolve_instance(opt);
    const CellDatum& d = *inst.datum;
    json lambdas = json::array();
    std::ostringstream table;
    for (int lam = 0; lam < d.num_lambdas(); ++lam) {
        SeminormalData data = seminormal_data(inst.content, lam);
        json fts = json::array();
        for (int t = 0; t < d.tableau_count(lam); ++t)
            fts.push_back(json{{"tableau", d.tableau_name(lam, t)},
                               {"action", matrix_to_json(data.ft_actions[static_cast<size_t>(t)])}});
        lambdas.push_back(json{{"lambda", d.lambda_name(lam)},
                               {"transition", matrix_to_json(data.transition)},
                               {"ft_actions", fts}});
        table << "lambda " << d.lambda_name(lam) << ": transition (columns are f_t)\n"
              << data.transition.to_string() << "\n";
    }
    json doc{{"schema_version", kSchemaVersion},
             {"command", "seminormal"},
             {"field", field_to_json(d.field())},
             {"lambdas", lambdas}};
    emit(opt, doc, table.str());
    return 0;
}

json report_to_json(const CheckReport& report) {
    json items = json::array();
    for (const auto& item : report.items)
        items.push_back(json{{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
    return items;
}

int run_idempotents(const Options& opt) {
    Instance inst = resolve_instance(opt);
    bool force = gates_overridden(opt);
    CheckReport report = idempotent_suite(inst.content, force);
    CheckReport spectral = spectral_identities(inst.content, force);
    CheckReport abelian = maximal_abelian_check(inst.content, force);
    report.items.insert(report.items.end(), spectral.items.begin(), spectral.items.end());
    report.items.insert(report.items.end(), abelian.items.begin(), abelian.items.end());
    json doc{{"schema_version", kSchemaVersion},
             {"command", "idempotents"},
             {"checks", report_to_json(report)},
             {"pass", report.all_pass()}};
    emit(opt, doc, report.to_string());
    return report_exit(report);
}

int run_blocks(const Options& opt) {
    if (opt.algebra != "hecke") throw error("blocks: only the hecke algebra is wired to the DVR lift");
    FieldPtr f = parse_field(opt.field);
    if (f->tag() == FieldTag::RatFunc)
        throw error("blocks: pick a numeric field and a specialization --q");
    Scalar q = opt.q_text.empty() ? Scalar::one(f) : Scalar::parse(opt.q_text, f);
    bool force = gates_overridden(opt);
    ModularInstance mi = lift_hecke(opt.n, f, q, force);
    BlocksData data = compute_blocks(mi, force);
    const CellDatum& dk = *mi.over_k.datum;

    json classes = json::array();
    std::ostringstream table;
    table << "residue classes:\n";
    for (const auto& cls : data.classes) {
        json members = json::array(), residues = json::array();
        table << "  {";
        for (size_t i = 0; i < cls.members.size(); ++i) {
            auto [lam, t] = dk.tableau_from_global(cls.members[i]);
            members.push_back(dk.lambda_name(lam) + ":" + dk.tableau_name(lam, t));
            table << (i ? ", " : "") << dk.lambda_name(lam) << ":" << dk.tableau_name(lam, t);
        }
        for (const Scalar& r : cls.residues) residues.push_back(scalar_to_json(r));
        table << "}\n";
        classes.push_back(json{{"members", members}, {"residues", residues}});
    }
    json linkage = json::array();
    table << "linkage classes:\n";
    for (const auto& gamma : data.linkage) {
        BlockBasis blk = g_basis(mi, data, gamma);
        json lams = json::array();
        table << "  {";
        for (size_t i = 0; i < gamma.size(); ++i) {
            lams.push_back(dk.lambda_name(gamma[i]));
            table << (i ? ", " : "") << dk.lambda_name(gamma[i]);
        }
        table << "}  dim " << blk.dimension() << "\n";
        json gbasis = json::array();
        for (size_t i = 0; i < blk.g.size(); ++i) {
            json coeffs = json::array();
            for (const auto& [b, c] : blk.g[i].coeffs())
                coeffs.push_back(json{{"basis", dk.basis_name(b)}, {"coeff", scalar_to_json(c)}});
            gbasis.push_back(json{{"index", dk.basis_name(blk.basis_indices[i])}, {"coeffs", coeffs}});
        }
        linkage.push_back(json{{"lambdas", lams}, {"dimension", blk.dimension()}, {"g_basis", gbasis}});
    }
    CheckReport report = block_report(mi, force);
    table << report.to_string();
    json doc{{"schema_version", kSchemaVersion},
             {"command", "blocks"},
             {"field", field_to_json(f)},
             {"q", scalar_to_json(q)},
             {"residue_classes", classes},
             {"linkage_classes", linkage},
             {"checks", report_to_json(report)},
             {"pass", report.all_pass()}};
    emit(opt, doc, table.str());
    return report_exit(report);
}

Matrix random_upper_matrix(std::mt19937_64& rng, const FieldPtr& f, const std::vector<long>& diag) {
    std::uniform_int_distribution<long> e(-4, 4);
    size_t d = diag.size();
    Matrix m(f, d, d);
    for (size_t i = 0; i < d; ++i) {
        m.at(i, i) = Scalar::from_int(diag[i], f);
        for (size_t j = i + 1; j < d; ++j) m.at(i, j) = Scalar::from_int(e(rng), f);
    }
    return m;
}

int run_appendix(const Options& opt) {
    std::ostringstream table;
    json doc{{"schema_version", kSchemaVersion}, {"command", "appendix"}};

    if (opt.random_trials > 0) {
        std::mt19937_64 rng(opt.seed);
        LocalRingContext ctx = LocalRingContext::field();
        auto Q = Field::rationals();
        auto F5 = Field::prime(5);
        int separated_pass = 0, linkage_pass = 0;
        for (int trial = 0; trial < opt.random_trials; ++trial) {
            std::uniform_int_distribution<size_t> dims(2, 8);
            size_t d = dims(rng);
            std::vector<long> diag(d);
            for (size_t i = 0; i < d; ++i) diag[i] = static_cast<long>(i * 2 + 1);
            std::shuffle(diag.begin(), diag.end(), rng);
            auto fam = make_family({random_upper_matrix(rng, Q, diag)});
            auto out = complete_idempotents(fam, ctx);
            separated_pass += out.classes.size() == d ? 1 : 0;

            std::uniform_int_distribution<long> pick(0, 2);
            std::vector<long> d1(d), d2(d);
            for (size_t i = 0; i < d; ++i) {
                d1[i] = pick(rng);
                d2[i] = pick(rng);
            }
            auto fam5 = make_family({random_upper_matrix(rng, F5, d1), random_upper_matrix(rng, F5, d2)});
            auto out5 = complete_idempotents(fam5, ctx);
            linkage_pass += out5.idempotents.empty() ? 0 : 1;
        }
        bool pass = separated_pass == opt.random_trials && linkage_pass == opt.random_trials;
        table << "random separated families: " << separated_pass << "/" << opt.random_trials
              << "\nrandom linkage families: " << linkage_pass << "/" << opt.random_trials << "\n";
        doc["random"] = json{{"trials", opt.random_trials},
                             {"separated_pass", separated_pass},
                             {"linkage_pass", linkage_pass}};
        doc["pass"] = pass;
        emit(opt, doc, table.str());
        return pass ? 0 : 1;
    }

    if (opt.input_file.empty()) throw error("appendix needs --input fam.json or --random N");
    std::ifstream in(opt.input_file);
    if (!in) throw error("cannot open input file '" + opt.input_file + "'");
    json j = json::parse(in);
    TriangularFamily fam = family_from_json(j);
    LocalRingContext ctx = LocalRingContext::field();
    if (!opt.dvr_q.empty()) {
        if (fam.mats.front().field()->tag() != FieldTag::RatFunc)
            throw error("--dvr-q needs matrices over a rational function field");
        FieldPtr base = fam.mats.front().field()->base();
        DvrContext dctx(base, Scalar::parse(opt.dvr_q, base),
                        fam.mats.front().field()->variable());
        ctx = LocalRingContext::dvr(dctx);
    }
    CompleteIdempotents out = complete_idempotents(fam, ctx);
    json classes = json::array(), idems = json::array();
    table << "linkage classes of {1.." << fam.dimension() << "}:\n";
    for (const auto& cls : out.classes) {
        json c = json::array();
        table << "  {";
        for (size_t i = 0; i < cls.size(); ++i) {
            c.push_back(cls[i] + 1);
            table << (i ? ", " : "") << cls[i] + 1;
        }
        table << "}\n";
        classes.push_back(std::move(c));
    }
    for (const Matrix& e : out.idempotents) idems.push_back(matrix_to_json(e));
    table << out.idempotents.size() << " orthogonal idempotents, sum = identity\n";
    doc["linkage_classes"] = classes;
    doc["idempotents"] = idems;
    doc["pass"] = true;
    emit(opt, doc, table.str());
    return 0;
}

int run_verify(const Options& opt) {
    Instance inst = resolve_instance(opt);
    bool force = gates_overridden(opt);
    const CellDatum& d = *inst.datum;
    CheckReport report = content_table_checks(inst, force);
    SeparationResult sep = check_separation(inst.content);
    report.add("JM separation status", true,
               sep.separated ? "separated" : "not separated; block suite applies");

    if (sep.separated) {
        for (int lam = 0; lam < d.num_lambdas(); ++lam) {
            Scalar det = gram_determinant(inst.content, lam);
            report.add("gamma product matches Gram determinant at " + d.lambda_name(lam), true,
                       det.to_string());
        }
        CheckReport idem = idempotent_suite(inst.content, force);
        CheckReport spectral = spectral_identities(inst.content, force);
        CheckReport abelian = maximal_abelian_check(inst.content, force);
        for (auto* extra : {&idem, &spectral, &abelian})
            report.items.insert(report.items.end(), extra->items.begin(), extra->items.end());
    } else if (opt.algebra == "hecke" && opt.spec_file.empty()) {
        FieldPtr f = d.field();
        if (f->tag() != FieldTag::RatFunc) {
            Scalar q = opt.q_text.empty() ? Scalar::one(f) : Scalar::parse(opt.q_text, f);
            ModularInstance mi = lift_hecke(opt.n, f, q, force);
            CheckReport blocks = block_report(mi, force);
            report.items.insert(report.items.end(), blocks.items.begin(), blocks.items.end());
        }
    }
    json doc{{"schema_version", kSchemaVersion},
             {"command", "verify"},
             {"checks", report_to_json(report)},
             {"pass", report.all_pass()}};
    emit(opt, doc, report.to_string());
    return report_exit(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact seminormal forms, Gram determinants and blocks for cellular algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", opt.algebra, "toy | matrix | hecke");
        cmd->add_option("--n", opt.n, "size parameter");
        cmd->add_option("--field", opt.field, "Q | q-generic | F<p> | Q(q)");
        cmd->add_option("--q", opt.q_text, "hecke parameter (defaults: generator / 1)");
        cmd->add_option("--contents", opt.contents_text, "toy contents, comma separated");
        cmd->add_option("--spec", opt.spec_file, "instance specification JSON file");
        cmd->add_option("--format", opt.format, "table | json")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--seed", opt.seed, "seed for randomized suites");
        cmd->add_flag("--force-gates", opt.force_gates,
                      "override the desk-scale size gates (or SEMICELL_FORCE_GATES=1)");
    };

    CLI::App* gram = app.add_subcommand("gram", "gamma scalars and Gram determinants per lambda");
    CLI::App* seminormal = app.add_subcommand("seminormal", "transition matrices and F_t actions");
    CLI::App* idempotents = app.add_subcommand("idempotents", "separated-case idempotent suite");
    CLI::App* blocks = app.add_subcommand("blocks", "block decomposition over a DVR specialization");
    CLI::App* appendix = app.add_subcommand("appendix", "triangular-family idempotent pipeline");
    CLI::App* verify = app.add_subcommand("verify", "full invariant suite for an instance");
    for (CLI::App* cmd : {gram, seminormal, idempotents, blocks, appendix, verify}) add_common(cmd);
    appendix->add_option("--input", opt.input_file, "triangular family JSON file");
    appendix->add_option("--random", opt.random_trials, "run N randomized family trials");
    appendix->add_option("--dvr-q", opt.dvr_q, "treat scalars through the DVR at t = q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gram->parsed()) return run_gram(opt);
        if (seminormal->parsed()) return run_seminormal(opt);
        if (idempotents->parsed()) return run_idempotents(opt);
        if (blocks->parsed()) return run_blocks(opt);
        if (appendix->parsed()) return run_appendix(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        bool usage = msg.find("size gate") != std::string::npos ||
                     msg.find("cannot") != std::string::npos ||
                     msg.find("unknown") != std::string::npos ||
                     msg.find("needs") != std::string::npos ||
                     msg.find("parse") != std::string::npos;
        return usage ? 2 : 1;
    }
    return 2;
}

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "focaljet/json_io.hpp"

using namespace focaljet;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    return json::parse(in);
}

int default_order() {
    if (const char* env = std::getenv("FOCALJET_ORDER")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 6;
}

struct Output {
    std::string path;  // empty: stdout
    int emit(const json& report, int status) const {
        std::string text = report.dump(1) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            out << text;
        }
        return status;
    }
};

std::vector<int> parse_sigma(const std::string& s) {
    std::vector<int> sigma;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) sigma.push_back(std::stoi(item));
    return sigma;
}

LatticeVec parse_vec(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw SchemaError("lattice vector must be \"x,y\"");
    return {Int(s.substr(0, comma)), Int(s.substr(comma + 1))};
}

json violations_json(const std::vector<std::string>& v) {
    json out = json::array();
    for (const std::string& s : v) out.push_back(s);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for focus-focus affine invariants"};
    app.require_subcommand(1);
    app.fallthrough();  // --order/--out may follow the subcommand

    int order = default_order();
    Output out;
    app.add_option("--order", order, "jet truncation order")->capture_default_str();
    app.add_option("--out", out.path, "write the report to this file instead of stdout");

    std::string label_path, lp_path, g_path, tuple_path, tuplep_path, seed_path, chain_path;
    std::string rep_path, repp_path, targets_path, mu_str, action, sigma_str, kind, a_str, b_str;
    std::string xi1_str, xi2_str, b_rat = "0/1";
    bool mod2pix = false;
    long k_arg = 0, s_arg = 0;
    int m_arg = 3;

    auto* c_validate = app.add_subcommand("validate-label", "check the label relations");
    c_validate->add_option("--label", label_path)->required();
    c_validate->add_flag("--mod2pix", mod2pix, "the input is a label modulo (2 pi X)Z");

    auto* c_generate = app.add_subcommand("generate-label", "build a label from chain and seed");
    c_generate->add_option("--m", m_arg)->required();
    c_generate->add_option("--chain", chain_path, "JSON list of the jets g_{j,j+1}")->required();
    c_generate->add_option("--seed", seed_path, "JSON jet ts_0")->required();
    c_generate->add_flag("--mod2pix", mod2pix);

    auto* c_act = app.add_subcommand("act", "apply a group action to a label");
    c_act->add_option("--label", label_path)->required();
    c_act->add_option("--action", action, "one of z2, zm, zr")->required();
    c_act->add_option("--k", k_arg);
    c_act->add_option("--b", b_rat);
    c_act->add_option("--sigma", sigma_str, "permutation, e.g. \"1,0,2\"");
    c_act->add_flag("--mod2pix", mod2pix);

    auto* c_mu = app.add_subcommand("mu", "first-order invariant of a V+ jet");
    c_mu->add_option("--g", g_path)->required();

    auto* c_lift = app.add_subcommand("lift", "liftability report of a V+ jet");
    c_lift->add_option("--g", g_path)->required();

    auto* c_adm = app.add_subcommand("admissible", "affine admissibility of two tuples");
    c_adm->add_option("--tuple", tuple_path)->required();
    c_adm->add_option("--tuplep", tuplep_path)->required();
    c_adm->add_option("--mu", mu_str, "common invariant (default: inferred)");

    auto* c_eq = app.add_subcommand("equivalent", "affine equivalence of two complete labels");
    c_eq->add_option("--l", label_path)->required();
    c_eq->add_option("--lp", lp_path)->required();
    c_eq->add_option("--g", g_path)->required();

    auto* c_syn = app.add_subcommand("synthesize", "unique equivalent label over target jets");
    c_syn->add_option("--l", label_path)->required();
    c_syn->add_option("--targets", targets_path, "JSON list of V+ jets")->required();
    c_syn->add_option("--g", g_path)->required();

    auto* c_corner = app.add_subcommand("classify-corner", "Delzant/fake/hidden tests");
    c_corner->add_option("--xi1", xi1_str)->required();
    c_corner->add_option("--xi2", xi2_str)->required();
    c_corner->add_option("--s", s_arg)->required();

    auto* c_vrep = app.add_subcommand("validate-rep", "check an ingredient representative");
    c_vrep->add_option("--rep", rep_path)->required();

    auto* c_orbit = app.add_subcommand("orbit-equal", "find a Z x R witness between reps");
    c_orbit->add_option("--rep", rep_path)->required();
    c_orbit->add_option("--repp", repp_path)->required();

    auto* c_req = app.add_subcommand("rep-equivalent", "global affine comparison of reps");
    c_req->add_option("--rep", rep_path)->required();
    c_req->add_option("--repp", repp_path)->required();
    c_req->add_option("--g", g_path)->required();

    auto* c_ex = app.add_subcommand("example", "emit a certified counterexample pair");
    c_ex->add_option("--kind", kind, "permutation | liftable | concrete")->required();
    c_ex->add_option("--m", m_arg);
    c_ex->add_option("--sigma", sigma_str);
    c_ex->add_option("--a", a_str);
    c_ex->add_option("--b", b_str);
    c_ex->add_option("--g0p", tuple_path, "first liftable jet (kind=liftable)");
    c_ex->add_option("--g1p", tuplep_path, "second liftable jet (kind=liftable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_validate) {
            json j = read_json(label_path);
            std::vector<std::string> v;
            int n;
            if (mod2pix) {
                FFLabel l = ff_label_from_json(j);
                v = validate(l);
                n = l.order;
            } else {
                CompleteFFLabel l = complete_label_from_json(j);
                v = validate(l);
                n = l.order;
            }
            return out.emit({{"order", n}, {"violations", violations_json(v)}}, v.empty() ? 0 : 1);
        }
        if (*c_generate) {
            json cj = read_json(chain_path);
            if (!cj.is_array()) throw SchemaError("chain must be a JSON list of jets");
            std::vector<SmoothJet> chain;
            for (const json& e : cj) chain.push_back(jet_from_json(e));
            SmoothJet seed = jet_from_json(read_json(seed_path));
            json report;
            if (mod2pix)
                report = to_json(generate_ff(m_arg, chain, seed, order));
            else
                report = to_json(generate_complete(m_arg, chain, seed, order));
            report["order"] = order;
            return out.emit(report, 0);
        }
        if (*c_act) {
            json j = read_json(label_path);
            json report;
            int n;
            if (action == "z2") {
                FFLabel l = ff_label_from_json(j);
                n = l.order;
                report = to_json(z2_action(l, k_arg));
            } else if (action == "zm") {
                std::vector<int> sigma = parse_sigma(sigma_str);
                if (mod2pix) {
                    FFLabel l = ff_label_from_json(j);
                    n = l.order;
                    report = to_json(zm_reindex(l, sigma));
                } else {
                    CompleteFFLabel l = complete_label_from_json(j);
                    n = l.order;
                    report = to_json(zm_reindex(l, sigma));
                }
            } else if (action == "zr") {
                CompleteFFLabel l = complete_label_from_json(j);
                n = l.order;
                report = to_json(zr_shift(l, k_arg, Rational::parse(b_rat)));
            } else {
                throw SchemaError("unknown action '" + action + "'");
            }
            report["order"] = n;
            return out.emit(report, 0);
        }
        if (*c_mu) {
            VPlusJet g = vplus_from_json(read_json(g_path));
            return out.emit({{"order", g.order()}, {"mu", to_json(first_order_invariant(g))}}, 0);
        }
        if (*c_lift) {
            VPlusJet g = vplus_from_json(read_json(g_path));
            LiftReport r = lift_report(g, first_order_invariant(g), order);
            json report = to_json(r);
            report["order"] = order;
            return out.emit(report, r.liftable ? 0 : 1);
        }
        if (*c_adm) {
            std::vector<VPlusJet> a = vplus_list_from_json(read_json(tuple_path));
            std::vector<VPlusJet> b = vplus_list_from_json(read_json(tuplep_path));
            if (a.empty()) throw SchemaError("empty tuple");
            Mu mu = mu_str.empty() ? first_order_invariant(a[0])
                                   : Mu(GaussRational::parse(mu_str));
            AdmissibilityReport r = affine_admissible(a, b, mu, order);
            json report{{"order", order},
                        {"verdict", r.admissible},
                        {"witness", to_json(r.witness)},
                        {"sum_mismatch", to_json(r.sum_mismatch)},
                        {"all_liftable", r.all_liftable},
                        {"sums_equal", r.sums_equal}};
            return out.emit(report, r.admissible ? 0 : 1);
        }
        if (*c_eq) {
            CompleteFFLabel l = complete_label_from_json(read_json(label_path));
            CompleteFFLabel lp = complete_label_from_json(read_json(lp_path));
            VPlusJet g = vplus_from_json(read_json(g_path));
            EquivalenceCertificate cert = label_equivalent(l, lp, g, order);
            json report{{"order", order},
                        {"verdict", cert.equivalent()},
                        {"certificate", to_json(cert)}};
            return out.emit(report, cert.equivalent() ? 0 : 1);
        }
        if (*c_syn) {
            CompleteFFLabel l = complete_label_from_json(read_json(label_path));
            std::vector<VPlusJet> targets = vplus_list_from_json(read_json(targets_path));
            VPlusJet g = vplus_from_json(read_json(g_path));
            CompleteFFLabel result = synthesize_equivalent(l, targets, g, order);
            json report = to_json(result);
            report["order"] = order;
            return out.emit(report, 0);
        }
        if (*c_corner) {
            CornerClass c = classify_corner(parse_vec(xi1_str), parse_vec(xi2_str), s_arg);
            json cats = json::array();
            if (c.delzant) cats.push_back("delzant");
            if (c.fake) cats.push_back(std::to_string(s_arg) + "-fake");
            if (c.hidden) cats.push_back(std::to_string(s_arg) + "-hidden");
            json report{{"order", order}, {"categories", cats},
                        {"delzant", c.delzant}, {"fake", c.fake}, {"hidden", c.hidden}};
            return out.emit(report, c.none() ? 1 : 0);
        }
        if (*c_vrep) {
            IngredientRep rep = rep_from_json(read_json(rep_path));
            auto v = validate_ingredient(rep);
            int n = rep.labels.empty() ? order : rep.labels[0].order;
            return out.emit({{"order", n}, {"violations", violations_json(v)}}, v.empty() ? 0 : 1);
        }
        if (*c_orbit) {
            IngredientRep rep = rep_from_json(read_json(rep_path));
            IngredientRep repp = rep_from_json(read_json(repp_path));
            auto w = rep_orbit_equal(rep, repp);
            json report{{"order", order}, {"verdict", w.has_value()}};
            report["witness"] =
                w ? json{{"k", w->k}, {"b", w->b.str()}} : json(nullptr);
            return out.emit(report, w ? 0 : 1);
        }
        if (*c_req) {
            IngredientRep rep = rep_from_json(read_json(rep_path));
            IngredientRep repp = rep_from_json(read_json(repp_path));
            VPlusJet g = vplus_from_json(read_json(g_path));
            RepEquivalence r = rep_affine_equivalent(rep, repp, g, order);
            json certs = json::array();
            for (const EquivalenceCertificate& c : r.certificates) certs.push_back(to_json(c));
            json report{{"order", order},
                        {"verdict", r.equivalent},
                        {"certificates", certs},
                        {"note", r.note}};
            report["orbit"] = r.orbit ? json{{"k", r.orbit->k}, {"b", r.orbit->b.str()}}
                                      : json(nullptr);
            return out.emit(report, r.equivalent ? 0 : 1);
        }
        if (*c_ex) {
            ExamplePair ex = [&] {
                if (kind == "permutation") {
                    std::vector<int> sigma =
                        sigma_str.empty() ? std::vector<int>{1, 0, 2} : parse_sigma(sigma_str);
                    return permutation_example(m_arg, sigma, order);
                }
                if (kind == "liftable") {
                    VPlusJet g0 = vplus_from_json(read_json(tuple_path));
                    VPlusJet g1 = vplus_from_json(read_json(tuplep_path));
                    return liftable_pair_example(g0, g1, SmoothJet(order, Basis::XY()), order);
                }
                if (kind == "concrete")
                    return concrete_example(GaussRational::parse(a_str),
                                            GaussRational::parse(b_str), order);
                throw SchemaError("unknown example kind '" + kind + "'");
            }();
            json report = to_json(ex);
            report["order"] = order;
            return out.emit(report, 0);
        }
    } catch (const json::parse_error& e) {
        return out.emit({{"error", {{"code", "malformed-json"}, {"message", e.what()}}}}, 2);
    } catch (const SchemaError& e) {
        return out.emit({{"error", {{"code", "schema"}, {"message", e.what()}}}}, 2);
    } catch (const HypothesisError& e) {
        return out.emit(
            {{"error", {{"code", "hypothesis"}, {"item", e.item}, {"message", e.what()}}}}, 2);
    } catch (const std::invalid_argument& e) {
        return out.emit({{"error", {{"code", "precondition"}, {"message", e.what()}}}}, 2);
    } catch (const std::domain_error& e) {
        return out.emit({{"error", {{"code", "precondition"}, {"message", e.what()}}}}, 2);
    } catch (const std::exception& e) {
        return out.emit({{"error", {{"code", "internal"}, {"message", e.what()}}}}, 2);
    }
    return 2;
}

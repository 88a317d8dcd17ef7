// Batch front end: every operation of the library behind one subcommand-style
// binary. All state flows through arguments and stdout; same input, same
// bytes out. Exit codes: 0 ok, 2 malformed input, 3 violated precondition.

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include <qhopf/checks.hpp>
#include <qhopf/fock.hpp>
#include <qhopf/hall.hpp>
#include <qhopf/repring.hpp>
#include <qhopf/rootspec.hpp>
#include <qhopf/textio.hpp>

using namespace qhopf;
using nlohmann::json;

namespace {

int parse_quiver(const std::string& s) {
    if (s == "ainf") return 0;
    if (s.rfind("cyclic:", 0) == 0) {
        int l = std::atoi(s.c_str() + 7);
        if (l >= 1) return l;
    }
    throw ParseError("quiver must be 'ainf' or 'cyclic:<l>'", 0);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw ParseError("empty entry in list", pos);
        out.push_back(std::atoi(tok.c_str()));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_shape(const std::string& s) {
    Partition p = s.empty() ? Partition{} : Partition{};
    for (int x : parse_int_list(s)) p.push_back(x);
    if (!is_partition(p)) throw ParseError("shape must be weakly decreasing and positive", 0);
    return p;
}

json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({print_monomial(m), c.str()});
    return json{{"modulus", p.modulus()}, {"terms", terms}};
}

json tensor_json(const TensorPoly& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back({print_monomial(k.first), print_monomial(k.second), c.str()});
    return json{{"modulus", t.modulus()}, {"terms", terms}};
}

json hall_json(const HallElement& h) {
    json terms = json::array();
    for (const auto& [s, c] : h.terms) terms.push_back({print_aset(s), c.str()});
    return json{{"quiver", h.quiver_l}, {"terms", terms}};
}

void emit_poly(const LaurentPoly& p, bool as_json) {
    if (as_json)
        std::cout << poly_json(p).dump() << "\n";
    else
        std::cout << print_poly(p) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the representation ring, its Hall dual and Fock modules"};
    app.require_subcommand(1);
    std::function<void()> action;
    bool as_json = false;

    // ---- qchar -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("qchar", "character of an evaluation module");
        auto shape = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto N = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        cmd->add_option("--shape", *shape, "partition, e.g. 2,1")->required();
        cmd->add_option("--n", *n, "lattice point");
        cmd->add_option("--N", *N, "level")->required();
        cmd->add_option("--l", *l, "spectral modulus (0 = generic)");
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() { emit_poly(qchar_eval(parse_shape(*shape), *n, *N, *l), as_json); };
        });
    }

    // ---- coprod / antipode / res / pbw --------------------------------------
    {
        auto* cmd = app.add_subcommand("coprod", "coproduct of a PBW element");
        auto expr = std::make_shared<std::string>();
        auto l = std::make_shared<int>(0);
        cmd->add_option("--expr", *expr)->required();
        cmd->add_option("--l", *l);
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                TensorPoly t = coproduct(parse_poly(*expr, *l));
                if (as_json)
                    std::cout << tensor_json(t).dump() << "\n";
                else
                    std::cout << print_tensor(t) << "\n";
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("antipode", "antipode of a PBW element");
        auto expr = std::make_shared<std::string>();
        auto l = std::make_shared<int>(0);
        cmd->add_option("--expr", *expr)->required();
        cmd->add_option("--l", *l);
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() { emit_poly(antipode(parse_poly(*expr, *l)), as_json); };
        });
    }
    {
        auto* cmd = app.add_subcommand("res", "restriction operator");
        auto expr = std::make_shared<std::string>();
        auto m = std::make_shared<std::string>();
        auto l = std::make_shared<int>(0);
        cmd->add_option("--expr", *expr)->required();
        cmd->add_option("--m", *m, "comma list of lattice points (empty = identity)");
        cmd->add_option("--l", *l);
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() { emit_poly(res(parse_poly(*expr, *l), parse_int_list(*m)), as_json); };
        });
    }
    {
        auto* cmd = app.add_subcommand("pbw", "expansion of a character in the PBW basis");
        auto expr = std::make_shared<std::string>();
        auto eval = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto N = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        cmd->add_option("--expr", *expr, "character polynomial in L variables");
        cmd->add_option("--eval", *eval, "partition of an evaluation class, e.g. [2,1]");
        cmd->add_option("--n", *n);
        cmd->add_option("--N", *N, "level")->required();
        cmd->add_option("--l", *l);
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                CharPoly chi = !eval->empty() ? qchar_eval(parse_partition(*eval), *n, *N, *l)
                                              : parse_poly(*expr, *l);
                emit_poly(express_in_pbw(chi, *N), as_json);
            };
        });
    }

    // ---- hall ---------------------------------------------------------------
    {
        auto* hall = app.add_subcommand("hall", "Hall algebra operations");
        hall->require_subcommand(1);
        auto quiver = std::make_shared<std::string>("ainf");
        hall->add_option("--quiver", *quiver, "ainf or cyclic:<l>")->capture_default_str();
        {
            auto* cmd = hall->add_subcommand("mul", "product of two A-sets");
            auto a = std::make_shared<std::string>();
            auto b = std::make_shared<std::string>();
            auto alg = std::make_shared<std::string>("count");
            cmd->add_option("--a", *a)->required();
            cmd->add_option("--b", *b)->required();
            cmd->add_option("--alg", *alg, "count or dual")->capture_default_str();
            cmd->add_flag("--json", as_json);
            cmd->callback([=, &action]() {
                action = [=]() {
                    int l = parse_quiver(*quiver);
                    ASet K = parse_aset(*a, l), L = parse_aset(*b, l);
                    HallElement h = (*alg == "dual") ? hall_mul_dual(K, L) : hall_mul(K, L);
                    if (as_json)
                        std::cout << hall_json(h).dump() << "\n";
                    else
                        std::cout << print_hall(h) << "\n";
                };
            });
        }
        {
            auto* cmd = hall->add_subcommand("comul", "comultiplication of an A-set");
            auto a = std::make_shared<std::string>();
            cmd->add_option("--a", *a)->required();
            cmd->callback([=, &action]() {
                action = [=]() {
                    int l = parse_quiver(*quiver);
                    bool first = true;
                    for (const auto& [k, c] : hall_comul(parse_aset(*a, l))) {
                        if (!first) std::cout << " + ";
                        first = false;
                        if (c != 1) std::cout << c.str() << "*";
                        std::cout << print_aset(k.first) << " # " << print_aset(k.second);
                    }
                    std::cout << "\n";
                };
            });
        }
        {
            auto* cmd = hall->add_subcommand("pair", "pairing with a PBW element");
            auto a = std::make_shared<std::string>();
            auto expr = std::make_shared<std::string>();
            cmd->add_option("--a", *a)->required();
            cmd->add_option("--expr", *expr)->required();
            cmd->callback([=, &action]() {
                action = [=]() {
                    int l = parse_quiver(*quiver);
                    HallElement h = parse_hall(*a, l);
                    std::cout << hall_pairing(h, parse_poly(*expr, l)).str() << "\n";
                };
            });
        }
        {
            auto* cmd = hall->add_subcommand("center", "central elements of the cyclic quiver");
            auto kind = std::make_shared<std::string>();
            auto i = std::make_shared<int>(1);
            cmd->add_option("--kind", *kind, "z or p")->required();
            cmd->add_option("--i", *i)->required();
            cmd->callback([=, &action]() {
                action = [=]() {
                    int l = parse_quiver(*quiver);
                    if (l < 1) throw DomainError("central elements need a cyclic quiver");
                    if (*kind != "z" && *kind != "p") throw ParseError("kind must be z or p", 0);
                    HallElement h = *kind == "z" ? central_z(*i, l) : central_p(*i, l);
                    std::cout << print_hall(h) << "\n";
                };
            });
        }
        {
            auto* cmd = hall->add_subcommand("unwind", "lift to the infinite linear quiver");
            auto a = std::make_shared<std::string>();
            auto lo = std::make_shared<int>(0);
            auto hi = std::make_shared<int>(0);
            cmd->add_option("--a", *a)->required();
            cmd->add_option("--lo", *lo)->required();
            cmd->add_option("--hi", *hi)->required();
            cmd->callback([=, &action]() {
                action = [=]() {
                    int l = parse_quiver(*quiver);
                    std::cout << print_hall(unwind(parse_hall(*a, l), *lo, *hi)) << "\n";
                };
            });
        }
    }

    // ---- root-of-unity layer -------------------------------------------------
    {
        auto* cmd = app.add_subcommand("frobenius", "pullback of a fundamental class");
        auto l = std::make_shared<int>(0);
        auto i = std::make_shared<int>(0);
        auto N = std::make_shared<int>(0);
        cmd->add_option("--l", *l)->required();
        cmd->add_option("--i", *i)->required();
        cmd->add_option("--N", *N, "also print the character at this level");
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() {
                TElement f = frobenius_pullback_fund(*i, *l);
                emit_poly(f, as_json);
                if (*N > 0) emit_poly(char_of_pbw(f, *N), as_json);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("detcoeff", "coefficient of the loop-matrix determinant");
        auto l = std::make_shared<int>(0);
        auto i = std::make_shared<int>(0);
        cmd->add_option("--l", *l)->required();
        cmd->add_option("--i", *i)->required();
        cmd->add_flag("--json", as_json);
        cmd->callback([=, &action]() {
            action = [=]() { emit_poly(det_coeff(*i, *l), as_json); };
        });
    }
    {
        auto* cmd = app.add_subcommand("ideal", "membership in the determinant ideal");
        auto l = std::make_shared<int>(0);
        auto expr = std::make_shared<std::string>();
        auto maxdeg = std::make_shared<int>(8);
        cmd->add_option("--l", *l)->required();
        cmd->add_option("--expr", *expr)->required();
        cmd->add_option("--maxdeg", *maxdeg)->capture_default_str();
        cmd->callback([=, &action]() {
            action = [=]() {
                bool in = in_center_ideal(parse_poly(*expr, *l), *maxdeg);
                std::cout << (in ? "true" : "false") << "\n";
            };
        });
    }

    // ---- fock -----------------------------------------------------------------
    {
        auto* fock = app.add_subcommand("fock", "Fock module operations");
        fock->require_subcommand(1);
        {
            auto* cmd = fock->add_subcommand("apply", "apply a raising/lowering operator");
            auto op = std::make_shared<std::string>();
            auto m = std::make_shared<int>(0);
            auto weights = std::make_shared<std::string>("0");
            auto l = std::make_shared<int>(0);
            auto state = std::make_shared<std::string>();
            cmd->add_option("--op", *op, "e, f or h")->required();
            cmd->add_option("--m", *m)->required();
            cmd->add_option("--weights", *weights, "lattice point per tensor factor")
                ->capture_default_str();
            cmd->add_option("--l", *l, "fold modulus (0 = unfolded)");
            cmd->add_option("--state", *state, "e.g. '|[1];[]>'")->required();
            cmd->callback([=, &action]() {
                action = [=]() {
                    FockOp fop;
                    if (*op == "e")
                        fop = FockOp::E;
                    else if (*op == "f")
                        fop = FockOp::F;
                    else if (*op == "h")
                        fop = FockOp::H;
                    else
                        throw ParseError("op must be e, f or h", 0);
                    FockSpace space{parse_int_list(*weights), *l};
                    std::cout << print_fock(fock_apply(space, fop, *m, parse_fock(*state)))
                              << "\n";
                };
            });
        }
        {
            auto* cmd = fock->add_subcommand("char", "principal character vs diagram counting");
            auto weights = std::make_shared<std::string>();
            auto l = std::make_shared<int>(0);
            auto deg = std::make_shared<int>(6);
            cmd->add_option("--weights", *weights, "shift list, e.g. 0,0")->required();
            cmd->add_option("--l", *l, "fold modulus (0 = unfolded)");
            cmd->add_option("--deg", *deg)->capture_default_str();
            cmd->callback([=, &action]() {
                action = [=]() {
                    std::vector<int> s = parse_int_list(*weights);
                    auto [counted, character] =
                        *l > 0 ? folded_genfun(s, *l, *deg) : sdiagram_genfun(s, *deg);
                    std::cout << "counted:   " << print_series(counted) << "\n";
                    std::cout << "character: " << print_series(character) << "\n";
                    std::cout << (counted == character ? "MATCH" : "MISMATCH") << "\n";
                };
            });
        }
    }

    // ---- diagrams ---------------------------------------------------------------
    {
        auto* diagrams = app.add_subcommand("diagrams", "shifted-union diagram enumeration");
        diagrams->require_subcommand(1);
        {
            auto* cmd = diagrams->add_subcommand("sdiag", "count (or list) diagrams");
            auto shifts = std::make_shared<std::string>();
            auto n = std::make_shared<int>(0);
            auto list = std::make_shared<bool>(false);
            cmd->add_option("--shifts", *shifts)->required();
            cmd->add_option("--n", *n)->required();
            cmd->add_flag("--list", *list);
            cmd->callback([=, &action]() {
                action = [=]() {
                    auto all = sdiagram_enumerate(parse_int_list(*shifts), *n);
                    std::cout << all.size() << "\n";
                    if (*list)
                        for (const SDiagram& d : all) std::cout << print_sdiagram(d) << "\n";
                };
            });
        }
        {
            auto* cmd = diagrams->add_subcommand("folded", "count (or list) acyclic folded diagrams");
            auto shifts = std::make_shared<std::string>();
            auto l = std::make_shared<int>(2);
            auto n = std::make_shared<int>(0);
            auto list = std::make_shared<bool>(false);
            cmd->add_option("--shifts", *shifts)->required();
            cmd->add_option("--l", *l)->required();
            cmd->add_option("--n", *n)->required();
            cmd->add_flag("--list", *list);
            cmd->callback([=, &action]() {
                action = [=]() {
                    std::set<std::map<std::pair<int, int>, int>> seen;
                    std::vector<FoldedDiagram> acyclic;
                    for (const SDiagram& d : sdiagram_enumerate(parse_int_list(*shifts), *n)) {
                        FoldedDiagram f = fold_diagram(d, *l);
                        if (seen.insert(f.boxes).second && f.acyclic) acyclic.push_back(f);
                    }
                    std::cout << acyclic.size() << "\n";
                    if (*list)
                        for (const FoldedDiagram& f : acyclic)
                            std::cout << print_folded(f) << "\n";
                };
            });
        }
    }

    // ---- check -------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("check", "run a named invariant suite");
        auto suite = std::make_shared<std::string>();
        auto maxdeg = std::make_shared<int>(-1);
        auto quiver = std::make_shared<std::string>();
        cmd->add_option("suite", *suite, "suite name, or 'all'")->required();
        cmd->add_option("--maxdeg", *maxdeg);
        cmd->add_option("--quiver", *quiver, "restrict to ainf or cyclic:<l>");
        cmd->callback([=, &action]() {
            action = [=]() {
                checks::Options opt;
                opt.maxdeg = *maxdeg;
                if (!quiver->empty()) opt.quiver_l = parse_quiver(*quiver);
                bool all_pass = true;
                if (*suite == "all") {
                    for (const auto& rep : checks::run_all(opt)) {
                        std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.name << ": "
                                  << rep.detail << "\n";
                        all_pass = all_pass && rep.pass;
                    }
                } else {
                    if (!checks::has_suite(*suite)) throw ParseError("unknown suite " + *suite, 0);
                    checks::Report rep = checks::run_suite(*suite, opt);
                    std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.detail << "\n";
                    all_pass = rep.pass;
                }
                if (!all_pass) std::exit(1);
            };
        });
    }

    try {
        app.parse(argc, argv);
        action();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

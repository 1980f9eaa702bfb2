#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torusknot/forms.hpp"
#include "torusknot/knot_map.hpp"
#include "torusknot/record.hpp"
#include "torusknot/suites.hpp"
#include "torusknot/triangle_group.hpp"
#include "torusknot/uniformizer.hpp"

using namespace tk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int p = 2, q = 3;
    double tol = 0;
    unsigned seed = 0;
    std::string format = "record";
    std::string out;

    std::vector<double> z, w, z1, z2;
    double t = 0;
    int radius = 1;
    std::string domain = "D1";
    std::string tag = "inf";
    std::string suite = "all";

    void validate() const {
        if (p < 2 || q < 2) throw UsageError("p and q must be at least 2");
        if (std::gcd(p, q) != 1)
            throw UsageError("p = " + std::to_string(p) + " and q = " + std::to_string(q) + " are not coprime");
    }
};

cplx pointArg(const std::vector<double>& v, const char* flag, cplx fallback) {
    if (v.empty()) return fallback;
    if (v.size() != 2) throw UsageError(std::string(flag) + " takes two numbers: RE IM");
    return {v[0], v[1]};
}

void emit(const RunConfig& cfg, const Record& rec) {
    std::string text = cfg.format == "text" ? printText(rec) : printRecord(rec) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    f << text;
}

void addPair(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("p,--p", cfg.p, "first exponent")->capture_default_str();
    sub->add_option("q,--q", cfg.q, "second exponent")->capture_default_str();
}

void addCommon(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "record"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "output path");
}

void addSampling(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--tol", cfg.tol, "raise every numeric threshold to at least this value");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
}

int runVerify(const RunConfig& cfg, const std::string& suite) {
    TriangleGroupData G = buildGroup(cfg.p, cfg.q);
    SuiteOptions opt{cfg.tol, cfg.seed};
    Report rep;
    if (suite == "group" || suite == "all") rep.append(groupSuite(G, opt), "group: ");
    if (suite != "group") {
        FormEvaluator E(G);
        if (suite == "forms" || suite == "all") rep.append(formsSuite(E, opt), "forms: ");
        if (suite == "knotmap" || suite == "all") rep.append(knotmapSuite(E, opt), "knotmap: ");
    }
    if (cfg.tol > 0) rep = loosen(rep, cfg.tol);
    Record rec = toRecord(rep);
    rec["p"] = cfg.p;
    rec["q"] = cfg.q;
    rec["suite"] = suite;
    emit(cfg, rec);
    return rep.allPass() ? 0 : 1;
}

// Upper half-plane viewport mapped to pixels, y pointing up.
std::string tilingSvg(const TriangleGroupData& G, const std::vector<Tile>& tiles, DomainTag tag) {
    double xmin = 1e300, xmax = -1e300, ymax = 0;
    for (const auto& t : tiles)
        for (const auto& poly : t.polygons)
            for (cplx z : poly) {
                xmin = std::min(xmin, z.real());
                xmax = std::max(xmax, z.real());
                ymax = std::max(ymax, z.imag());
            }
    const double pad = 0.05 * (xmax - xmin + ymax);
    xmin -= pad;
    xmax += pad;
    ymax += pad;
    const double width = 800, scale = width / (xmax - xmin), height = std::ceil(ymax * scale);
    auto px = [&](cplx z) {
        std::ostringstream s;
        s.precision(6);
        s << (z.real() - xmin) * scale << ',' << height - z.imag() * scale;
        return s.str();
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "  <title>(" << G.p << "," << G.q << ",inf) tiling, domain " << toString(tag) << ", " << tiles.size()
        << " tiles</title>\n"
        << "  <line x1=\"0\" y1=\"" << height << "\" x2=\"" << width << "\" y2=\"" << height
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& t : tiles) {
        const std::string word = toString(t.word);
        svg << "  <path data-word=\"" << (word.empty() ? "1" : word) << "\" fill=\""
            << (t.word.length() == 0 ? "#f4d58d" : "none") << "\" stroke=\"#1f3a5f\" stroke-width=\"0.8\" d=\"";
        for (const auto& poly : t.polygons) {
            for (std::size_t k = 0; k < poly.size(); ++k) svg << (k == 0 ? "M" : " L") << px(poly[k]);
            svg << " Z ";
        }
        svg << "\"><title>" << (word.empty() ? "1" : word) << "</title></path>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torus knot complements as coset spaces of the universal cover of PSL2(R)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* info = app.add_subcommand("info", "group data, characters and lens parameters");
    addPair(info, cfg);
    addCommon(info, cfg);

    auto* verify = app.add_subcommand("verify", "run invariant suites; exit status 0 iff all checks pass");
    addPair(verify, cfg);
    verify->add_option("suite", cfg.suite, "group, forms, knotmap or all")
        ->check(CLI::IsMember({"group", "forms", "knotmap", "all"}))
        ->capture_default_str();
    addCommon(verify, cfg);
    addSampling(verify, cfg);

    auto* tileCmd = app.add_subcommand("tile", "write an SVG of a tiling of the upper half-plane");
    addPair(tileCmd, cfg);
    tileCmd->add_option("--domain", cfg.domain, "D, D1 or Dprime")->capture_default_str();
    tileCmd->add_option("--radius", cfg.radius, "word radius of the tiling")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    tileCmd->add_option("--out", cfg.out, "SVG path")->required();
    tileCmd->add_option("--format", cfg.format, "summary format")
        ->check(CLI::IsMember({"text", "record"}))
        ->capture_default_str();

    auto* theta = app.add_subcommand("theta", "evaluate the uniformizer and its derivative");
    addPair(theta, cfg);
    theta->add_option("--z", cfg.z, "point RE IM")->expected(2)->required();
    addCommon(theta, cfg);

    auto* forms = app.add_subcommand("forms", "automorphic forms f_a, f_b, f_inf");
    forms->require_subcommand(1);
    auto* formsEval = forms->add_subcommand("eval", "evaluate a form at a tangent point");
    addPair(formsEval, cfg);
    formsEval->add_option("--tag", cfg.tag, "a, b or inf")->capture_default_str();
    formsEval->add_option("--z", cfg.z, "point RE IM")->expected(2)->required();
    formsEval->add_option("--w", cfg.w, "tangent coordinate LOG ARG")->expected(2);
    addCommon(formsEval, cfg);
    auto* formsVerify = forms->add_subcommand("verify", "run the forms suite");
    addPair(formsVerify, cfg);
    addCommon(formsVerify, cfg);
    addSampling(formsVerify, cfg);

    auto* knot = app.add_subcommand("knot", "torus knot and radial projection");
    knot->require_subcommand(1);
    auto* knotSample = knot->add_subcommand("sample", "point of the knot at parameter t");
    addPair(knotSample, cfg);
    knotSample->add_option("--t", cfg.t, "parameter in [0, 1)")->capture_default_str();
    addCommon(knotSample, cfg);
    auto* knotProject = knot->add_subcommand("project", "weighted radial projection onto the unit sphere");
    addPair(knotProject, cfg);
    knotProject->add_option("--z1", cfg.z1, "first coordinate RE IM")->expected(2)->required();
    knotProject->add_option("--z2", cfg.z2, "second coordinate RE IM")->expected(2)->required();
    addCommon(knotProject, cfg);

    auto* lens = app.add_subcommand("lens", "lens space parameters of the quotient");
    addPair(lens, cfg);
    addCommon(lens, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        if (*info) {
            emit(cfg, groupInfoRecord(buildGroup(cfg.p, cfg.q)));
        } else if (*verify) {
            return runVerify(cfg, cfg.suite);
        } else if (*tileCmd) {
            DomainTag tag;
            try {
                tag = parseDomainTag(cfg.domain);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            TriangleGroupData G = buildGroup(cfg.p, cfg.q);
            auto tiles = tile(G, domainSpec(G, tag), cfg.radius);
            std::ofstream f(cfg.out);
            if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
            f << tilingSvg(G, tiles, tag);
            if (!f) throw std::runtime_error("failed writing " + cfg.out);
            Record rec;
            rec["p"] = cfg.p;
            rec["q"] = cfg.q;
            rec["domain"] = toString(tag);
            rec["radius"] = cfg.radius;
            rec["tiles"] = tiles.size();
            rec["svg"] = cfg.out;
            std::cout << (cfg.format == "text" ? printText(rec) : printRecord(rec) + "\n");
        } else if (*theta) {
            Uniformizer U(buildGroup(cfg.p, cfg.q));
            Record rec = toRecord(U.theta(pointArg(cfg.z, "--z", {})));
            emit(cfg, rec);
        } else if (*formsEval) {
            FormTag tag;
            try {
                tag = parseFormTag(cfg.tag);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            FormEvaluator E(buildGroup(cfg.p, cfg.q));
            cplx z = pointArg(cfg.z, "--z", {});
            cplx w = pointArg(cfg.w, "--w", 0.0);
            TangentPoint pt{z, {w.real(), w.imag()}};
            cplx logValue = E.evalFormLogs(pt)[static_cast<int>(tag)];
            Record rec;
            rec["tag"] = toString(tag);
            rec["degree"] = toRecord(E.degree(tag));
            rec["z"] = toRecord(z);
            rec["w"] = toRecord(w);
            rec["value"] = toRecord(E.evalForm(tag, pt));
            if (std::isfinite(logValue.real())) rec["log"] = toRecord(logValue);
            emit(cfg, rec);
        } else if (*formsVerify) {
            return runVerify(cfg, "forms");
        } else if (*knotSample) {
            emit(cfg, toRecord(knotPoint(cfg.p, cfg.q, cfg.t)));
        } else if (*knotProject) {
            KnotMapConfig C = unitConfig(cfg.p, cfg.q);
            emit(cfg, toRecord(radialProject(C, pointArg(cfg.z1, "--z1", {}), pointArg(cfg.z2, "--z2", {}))));
        } else if (*lens) {
            emit(cfg, toRecord(lensData(cfg.p, cfg.q)));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

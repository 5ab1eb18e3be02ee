#include "treealg/cli.hpp"

#include "treealg/dendriform.hpp"
#include "treealg/isos.hpp"
#include "treealg/primitives.hpp"
#include "treealg/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace treealg {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int maxDegree = 4;
    std::string operad = "magw";
    std::string kind = "coadd";
    int vars = 0;
    bool multilinear = false;
    bool binary = false;
    bool count = false;
    bool reduced = false;
    bool constant = false;
    int var = 0;
    int to = 0;
    std::optional<int> cap;
    int n = 0;
    std::vector<std::string> args;
};

class Command {
public:
    Command(std::ostream& out, std::istream& in, const Options& o) : out_(out), in_(in), o_(o) {}

    bool jsonOutput() const { return o_.format == "json"; }

    std::string text(std::size_t i) {
        if (i >= o_.args.size()) throw UsageError("missing argument");
        if (o_.args[i] != "-") return o_.args[i];
        if (!stdinText_) stdinText_ = std::string(std::istreambuf_iterator<char>(in_), {});
        return *stdinText_;
    }

    Operad operad() const { return o_.operad == "mag" ? Operad::Mag : Operad::Magw; }

    void emit(json j, const std::string& plain) {
        if (jsonOutput()) {
            json out = {{"schema", 1}};
            out.update(j);
            out_ << out.dump(2) << "\n";
        } else {
            out_ << plain;
            if (!plain.empty() && plain.back() != '\n') out_ << "\n";
        }
    }

    int trees();
    int coproduct();
    int shuffle();
    int derive();
    int dtree();
    int taylor();
    int primDim();
    int hwDim();
    int verify();
    int seq();
    int iso();

private:
    std::ostream& out_;
    std::istream& in_;
    const Options& o_;
    std::optional<std::string> stdinText_;
};

int Command::trees() {
    const int n = o_.n;
    std::vector<std::string> lines;
    if (o_.kind == "lr" || o_.kind == "bf") {
        for (const auto& t : enumerateBinaryTrees(n)) lines.push_back(printTree(t));
    } else if (o_.kind == "ck") {
        for (const auto& f : enumerateForests(n)) lines.push_back(printForest(f));
    } else {
        const bool binary = o_.binary || o_.operad == "mag";
        std::vector<Tree> found;
        if (o_.multilinear) {
            found = multilinearBasis(binary ? Operad::Mag : Operad::Magw, n);
        } else if (o_.vars > 0) {
            const auto& shapes = enumerateTrees(n, binary);
            std::vector<int> word(static_cast<std::size_t>(n), 1);
            while (true) {
                std::vector<Label> labels;
                for (int w : word) labels.push_back(Label::var(w));
                for (const auto& s : shapes) found.push_back(relabel(s, labels));
                std::size_t i = 0;
                while (i < word.size() && word[i] == o_.vars) word[i++] = 1;
                if (i == word.size()) break;
                ++word[i];
            }
            std::sort(found.begin(), found.end());
        } else {
            found = enumerateTrees(n, binary);
        }
        for (const auto& t : found) lines.push_back(printTree(t));
    }
    if (o_.count) {
        emit({{"command", "trees"}, {"count", lines.size()}}, std::to_string(lines.size()));
        return 0;
    }
    std::string plain;
    for (const auto& l : lines) plain += l + "\n";
    emit({{"command", "trees"}, {"count", lines.size()}, {"trees", lines}}, plain);
    return 0;
}

int Command::coproduct() {
    const std::string input = text(0);
    std::string result;
    if (o_.kind == "ck") {
        const ForestPoly f = parseForestPoly(input);
        result = printPoly(o_.reduced ? reducedCoproduct(f) : deltaCK(f));
    } else {
        const TreePoly f = parseTreePoly(input);
        const CoproductKind kind = o_.kind == "lr"   ? CoproductKind::LodayRonco
                                   : o_.kind == "bf" ? CoproductKind::BrouderFrabetti
                                                     : CoproductKind::Coadd;
        TreeTensor d;
        if (o_.reduced)
            d = reducedCoproduct(kind, f);
        else if (kind == CoproductKind::Coadd)
            d = coaddition(f);
        else
            d = kind == CoproductKind::LodayRonco ? deltaLR(f) : deltaBF(f);
        result = printPoly(d);
    }
    emit({{"command", "coproduct"}, {"kind", o_.kind}, {"reduced", o_.reduced}, {"result", result}}, result);
    return 0;
}

int Command::shuffle() {
    const TreePoly f = parseTreePoly(text(0));
    const TreePoly g = parseTreePoly(text(1));
    const std::string result = printPoly(shuffleMul(f, g, operad()));
    emit({{"command", "shuffle"}, {"operad", o_.operad}, {"result", result}}, result);
    return 0;
}

int Command::derive() {
    if (o_.var < 1) throw UsageError("--var must be >= 1");
    const TreePoly f = parseTreePoly(text(0));
    const std::string result = printPoly(o_.to > 0 ? partialKJ(o_.var, o_.to, f) : partialK(o_.var, f));
    emit({{"command", "derive"}, {"var", o_.var}, {"to", o_.to}, {"result", result}}, result);
    return 0;
}

int Command::dtree() {
    const TreePoly s = parseTreePoly(text(0));
    const TreePoly f = parseTreePoly(text(1));
    const std::string result = printPoly(partialTree(s, f));
    emit({{"command", "dtree"}, {"result", result}}, result);
    return 0;
}

int Command::taylor() {
    const TreePoly f = parseTreePoly(text(0));
    int m = o_.vars;
    if (m == 0)
        for (const auto& [t, c] : f)
            for (const auto& l : leafLabels(t)) m = std::max(m, l.index());
    const auto e = taylorRight(f, m);
    json coeffs = json::array();
    std::string plain;
    for (const auto& [j, a] : e.coefficients) {
        if (a.isZero()) continue;
        std::string idx;
        for (std::size_t i = 0; i < j.size(); ++i) idx += (i ? "," : "") + std::to_string(j[i]);
        coeffs.push_back({{"index", j}, {"coefficient", printPoly(a)}});
        plain += "(" + idx + "): " + printPoly(a) + "\n";
    }
    emit({{"command", "taylor"}, {"variables", m}, {"terms", coeffs}}, plain);
    return 0;
}

int Command::primDim() {
    const Operad op = operad();
    json rows = json::array();
    std::string plain = "n ambient prim formula match\n";
    bool ok = true;
    for (int n = 1; n <= o_.maxDegree; ++n) {
        const auto r = treealg::primDim(op, n, o_.cap);
        json row = {{"component", r.component}, {"ambientDim", r.ambientDim}, {"formulaDim", r.formulaDim.get_str()},
                    {"match", r.match}, {"basisSample", r.basisSample}};
        row["primDim"] = r.primDim ? json(*r.primDim) : json(nullptr);
        rows.push_back(row);
        if (r.primDim && !r.match) ok = false;
        plain += std::to_string(n) + " " + std::to_string(r.ambientDim) + " " +
                 (r.primDim ? std::to_string(*r.primDim) : std::string("-")) + " " + r.formulaDim.get_str() + " " +
                 (r.primDim ? (r.match ? "yes" : "NO") : "-") + "\n";
    }
    emit({{"command", "prim-dim"}, {"operad", o_.operad}, {"rows", rows}}, plain);
    return ok ? 0 : 1;
}

int Command::hwDim() {
    Multidegree md;
    std::stringstream ss(text(0));
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            md.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("multidegree must look like 3,1");
        }
    }
    const auto basis = highestWeightBasis(operad(), md, o_.constant ? WeightConstraint::Constant : WeightConstraint::Primitive);
    std::vector<std::string> polys;
    for (const auto& b : basis) polys.push_back(printPoly(b));
    emit({{"command", "hw-dim"}, {"multidegree", md}, {"constraint", o_.constant ? "constant" : "primitive"},
          {"dimension", basis.size()}, {"basis", polys}},
         std::to_string(basis.size()));
    return 0;
}

int Command::verify() {
    const std::string group = o_.args.empty() ? "all" : o_.args[0];
    const auto groups = suiteGroups();
    if (std::find(groups.begin(), groups.end(), group) == groups.end()) throw UsageError("unknown check group " + group);
    const auto reports = runSuite(group, o_.maxDegree);
    json checks = json::array();
    std::string plain;
    int failed = 0;
    for (const auto& r : reports) {
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"detail", r.detail}});
        plain += std::string(r.pass ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checked) + " cases)";
        if (!r.pass) plain += ": " + r.detail;
        plain += "\n";
        if (!r.pass) ++failed;
    }
    plain += std::to_string(reports.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(reports.size()) + " checks passed\n";
    emit({{"command", "verify"}, {"group", group}, {"maxDegree", o_.maxDegree}, {"checks", checks}, {"pass", failed == 0}}, plain);
    return failed == 0 ? 0 : 1;
}

int Command::seq() {
    const auto kind = sequenceKindFromName(text(0));
    if (!kind) throw UsageError("unknown sequence " + text(0));
    const auto table = sequence(*kind, o_.n > 0 ? o_.n : 10);
    std::vector<std::string> values;
    for (const auto& v : table.values) values.push_back(v.get_str());
    std::string plain;
    for (std::size_t i = 0; i < values.size(); ++i) plain += (i ? " " : "") + values[i];
    emit({{"command", "seq"}, {"name", sequenceKindName(*kind)}, {"values", values}}, plain);
    return 0;
}

int Command::iso() {
    const std::string which = text(0);
    const std::string input = text(1);
    std::string result;
    if (which == "xi")
        result = printPoly(xi(parseForestPoly(input)));
    else if (which == "theta")
        result = printPoly(theta(parseTreePoly(input)));
    else if (which == "psi")
        result = printPoly(psi(parseTreePoly(input)));
    else
        throw UsageError("iso expects theta, xi or psi");
    emit({{"command", "iso"}, {"map", which}, {"result", result}}, result);
    return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Tree algebras: free magmatic algebras, dendriform trees and their Hopf structures", "treealg"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto operadOpt = [&o](CLI::App* sub) {
        sub->add_option("--operad", o.operad, "mag or magw")->check(CLI::IsMember({"mag", "magw"}));
    };
    auto kindOpt = [&o](CLI::App* sub) {
        sub->add_option("--kind", o.kind, "Coproduct or algebra")->check(CLI::IsMember({"coadd", "lr", "ck", "bf"}));
    };

    auto* trees = app.add_subcommand("trees", "Enumerate trees with n leaves (or n vertices for --kind)");
    trees->add_option("n", o.n, "Size")->required()->check(CLI::NonNegativeNumber);
    operadOpt(trees);
    kindOpt(trees);
    trees->add_flag("--binary", o.binary, "Binary trees only");
    trees->add_flag("--multilinear", o.multilinear, "Label leaves x1..xn once each");
    trees->add_option("--vars", o.vars, "Label leaves with x1..xm")->check(CLI::NonNegativeNumber);
    trees->add_flag("--count", o.count, "Print only the number of trees");

    auto* coproduct = app.add_subcommand("coproduct", "Apply a coproduct");
    kindOpt(coproduct);
    coproduct->add_flag("--reduced", o.reduced, "Drop the primitive part");
    coproduct->add_option("poly", o.args, "Polynomial, or - for stdin")->required()->expected(1);

    auto* shuffle = app.add_subcommand("shuffle", "Shuffle product of two polynomials");
    operadOpt(shuffle);
    shuffle->add_option("polys", o.args, "Two polynomials")->required()->expected(2);

    auto* derive = app.add_subcommand("derive", "Partial derivative d_k, or d_kj with --to");
    derive->add_option("--var", o.var, "k")->required();
    derive->add_option("--to", o.to, "j");
    derive->add_option("poly", o.args)->required()->expected(1);

    auto* dtree = app.add_subcommand("dtree", "Generalized derivative d_S f");
    dtree->add_option("polys", o.args, "S and f")->required()->expected(2);

    auto* taylor = app.add_subcommand("taylor", "Taylor expansion with respect to right multiplications");
    taylor->add_option("--vars", o.vars, "Number of variables");
    taylor->add_option("poly", o.args)->required()->expected(1);

    auto* primDim = app.add_subcommand("prim-dim", "Dimensions of multilinear primitives");
    operadOpt(primDim);
    primDim->add_option("--max-degree", o.maxDegree)->check(CLI::PositiveNumber);
    primDim->add_option("--cap", o.cap, "Largest n for the exact kernel");
    primDim->add_flag("--multilinear", o.multilinear, "Accepted for symmetry; components are multilinear");

    auto* hwDim = app.add_subcommand("hw-dim", "Dimension of highest weight vectors");
    operadOpt(hwDim);
    hwDim->add_flag("--constant", o.constant, "Constants instead of primitives");
    hwDim->add_option("multidegree", o.args, "e.g. 3,1")->required()->expected(1);

    auto* verify = app.add_subcommand("verify", "Run invariant checks");
    verify->add_option("group", o.args, "Check group (default all)")->expected(0, 1);
    verify->add_option("--max-degree", o.maxDegree)->check(CLI::NonNegativeNumber);

    auto* seq = app.add_subcommand("seq", "Integer sequences");
    seq->add_option("name", o.args)->required()->expected(1);
    seq->add_option("--count", o.n)->check(CLI::PositiveNumber);

    auto* iso = app.add_subcommand("iso", "Apply theta, xi or psi");
    iso->add_option("args", o.args, "Map and polynomial")->required()->expected(2);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    Command cmd(out, in, o);
    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "trees") return cmd.trees();
        if (name == "coproduct") return cmd.coproduct();
        if (name == "shuffle") return cmd.shuffle();
        if (name == "derive") return cmd.derive();
        if (name == "dtree") return cmd.dtree();
        if (name == "taylor") return cmd.taylor();
        if (name == "prim-dim") return cmd.primDim();
        if (name == "hw-dim") return cmd.hwDim();
        if (name == "verify") return cmd.verify();
        if (name == "seq") return cmd.seq();
        if (name == "iso") return cmd.iso();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InternalInconsistency ? 1 : 2;
    }
    return 2;
}

}  // namespace treealg

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dicon/dicon.hpp"

namespace {

using namespace dicon;

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string group;
  int p = 0, q = 0, n = 0;
  bool hasP = false, hasQ = false, hasN = false;
  std::string form = "all";
  std::string method;
  std::string format;
  std::uint64_t termCap = std::uint64_t{1} << 24;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  int maxRank = 0;
  int extraLambdas = 0;
  bool injectFault = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void addCommon(CLI::App* sub, RunConfig& cfg, const std::string& methodDefault, const std::string& formatDefault) {
  cfg.method = methodDefault;
  cfg.format = formatDefault;
  sub->add_option("--group", cfg.group, "su | sp | so-odd | so-even | so-star")
      ->check(CLI::IsMember({"su", "sp", "so-odd", "so-even", "so-star"}));
  sub->add_option("--p", cfg.p, "first signature parameter");
  sub->add_option("--q", cfg.q, "second signature parameter");
  sub->add_option("--n", cfg.n, "rank parameter for sp and so-star");
  sub->add_option("--form", cfg.form, "real-form index or 'all'")->capture_default_str();
  sub->add_option("--method", cfg.method, "brute | closed | both")
      ->check(CLI::IsMember({"brute", "closed", "both"}))
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "text | json | csv | latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->capture_default_str();
  sub->add_option("--term-cap", cfg.termCap, "largest admissible number of subset terms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--workers", cfg.workers, "enumeration threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for sampling extra weights")->capture_default_str();
  sub->add_option("--max-rank", cfg.maxRank, "verify: skip cases above this rank (0 = no limit)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--extra-lambdas", cfg.extraLambdas, "repeat brute force at this many further weights")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--inject-fault", cfg.injectFault)->group("");
}

void noteGiven(CLI::App* sub, RunConfig& cfg) {
  cfg.hasP = sub->count("--p") > 0;
  cfg.hasQ = sub->count("--q") > 0;
  cfg.hasN = sub->count("--n") > 0;
}

GroupCase caseFor(Family f, const RunConfig& cfg) {
  GroupCase g;
  g.family = f;
  if (g.usesPQ()) {
    g.p = cfg.hasP ? cfg.p : 1;
    g.q = cfg.hasQ ? cfg.q : g.p;
  } else {
    g.n = cfg.hasN ? cfg.n : 1;
  }
  return GroupCase::make(g);
}

GroupCase requiredCase(const RunConfig& cfg) {
  if (cfg.group.empty()) throw Usage("--group is required");
  const Family f = *parseFamily(cfg.group);
  GroupCase probe;
  probe.family = f;
  if (probe.usesPQ() && !(cfg.hasP && cfg.hasQ)) throw Usage("--p and --q are required for " + cfg.group);
  if (!probe.usesPQ() && !cfg.hasN) throw Usage("--n is required for " + cfg.group);
  return caseFor(f, cfg);
}

std::vector<int> selectedForms(const GroupCase& g, const std::string& form) {
  std::vector<int> out;
  const auto forms = realForms(g);
  if (form == "all") {
    for (const auto& f : forms) out.push_back(f.index);
    return out;
  }
  int idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoi(form, &used);
    if (used != form.size()) throw std::invalid_argument(form);
  } catch (const std::exception&) {
    throw Usage("--form must be an index or 'all', got '" + form + "'");
  }
  (void)findForm(forms, idx);
  out.push_back(idx);
  return out;
}

Method parseMethod(const std::string& m) {
  if (m == "brute") return Method::Brute;
  if (m == "closed") return Method::Closed;
  return Method::Both;
}

std::string dynkinText(const std::vector<int>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

std::vector<std::string> tableauLines(const SignedTableau& t) {
  std::vector<std::string> lines;
  std::string all = renderTableau(t), cur;
  for (char ch : all) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return lines;
}

int cmdRealForms(const RunConfig& cfg) {
  const GroupCase g = requiredCase(cfg);
  const auto indices = selectedForms(g, cfg.form);
  const Partition part = orbitPartition(g);

  if (cfg.format == "json") {
    Json forms = Json::array();
    for (int idx : indices) {
      const RealForm f = realForm(g, idx);
      forms.push_back({{"index", f.index},
                       {"label", f.label},
                       {"h", weightJson(f.h)},
                       {"dominantH", weightJson(dominantForm(g, f.h))},
                       {"weightedDynkin", weightedDynkin(g, dominantForm(g, f.h))},
                       {"exists", f.existsCondition},
                       {"tableau", tableauLines(signedTableau(g, idx))}});
    }
    Json j;
    j["case"] = {{"family", familyKey(g.family)}, {"params", paramsJson(g)}};
    j["orbit"] = part;
    j["forms"] = std::move(forms);
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << csvRow({"family", "params", "index", "label", "h", "dominantH", "weightedDynkin", "tableau"});
    for (int idx : indices) {
      const RealForm f = realForm(g, idx);
      std::string tab;
      for (const auto& l : tableauLines(signedTableau(g, idx))) tab += (tab.empty() ? "" : "/") + l;
      std::cout << csvRow({familyKey(g.family), paramsText(g), std::to_string(idx), f.label, hText(g, f.h),
                           weightString(dominantForm(g, f.h)), dynkinText(weightedDynkin(g, dominantForm(g, f.h))), tab});
    }
  } else if (cfg.format == "latex") {
    std::cout << "\\begin{tabular}{llll}\n\\hline\nForm & Label & $h$ & Weighted Dynkin \\\\\n\\hline\n";
    for (int idx : indices) {
      const RealForm f = realForm(g, idx);
      std::cout << idx << " & " << f.label << " & $" << latexWeight(g, f.h) << "$ & $"
                << dynkinText(weightedDynkin(g, dominantForm(g, f.h))) << "$ \\\\\n";
    }
    std::cout << "\\hline\n\\end{tabular}\n";
  } else {
    std::cout << g.name() << "  (" << paramsText(g) << ")  orbit " << latexPartition(part) << "\n";
    for (int idx : indices) {
      const RealForm f = realForm(g, idx);
      std::cout << "form " << idx << " [" << f.label << "]  exists: " << f.existsCondition << "\n"
                << "  h        = " << hText(g, f.h) << "\n"
                << "  dominant = " << weightString(dominantForm(g, f.h)) << "\n"
                << "  dynkin   = " << dynkinText(weightedDynkin(g, dominantForm(g, f.h))) << "\n"
                << "  tableau:\n";
      for (const auto& l : tableauLines(signedTableau(g, idx))) std::cout << "    " << l << "\n";
    }
  }
  return kOk;
}

void emitDocs(const std::vector<CaseDocument>& docs, const std::string& format) {
  if (format == "json") {
    if (docs.size() == 1) {
      std::cout << toJson(docs.front()).dump(2) << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& d : docs) arr.push_back(toJson(d));
      std::cout << Json{{"cases", arr}}.dump(2) << "\n";
    }
  } else if (format == "csv") {
    std::cout << toCsv(docs);
  } else if (format == "latex") {
    std::cout << toLatex(docs);
  } else {
    std::cout << toText(docs);
  }
}

int exitFor(const std::vector<CaseDocument>& docs) {
  for (const auto& d : docs)
    for (const auto& r : d.forms)
      if (r.agree && !*r.agree) return kDisagree;
  return kOk;
}

CaseDocument buildDocument(const GroupCase& g, const std::vector<int>& indices, const RunConfig& cfg) {
  ReportOptions opt;
  opt.method = parseMethod(cfg.method);
  opt.sum.termCap = cfg.termCap;
  opt.sum.workers = cfg.workers;
  opt.seed = cfg.seed;
  opt.extraLambdas = cfg.extraLambdas;
  CaseDocument d;
  d.group = g;
  for (int idx : indices) {
    d.forms.push_back(constantReport(g, idx, opt));
    d.expressions.push_back(closedFormExpression(g, idx, cfg.format == "latex"));
  }
  return d;
}

int cmdConstant(const RunConfig& cfg) {
  const GroupCase g = requiredCase(cfg);
  std::vector<CaseDocument> docs{buildDocument(g, selectedForms(g, cfg.form), cfg)};
  emitDocs(docs, cfg.format);
  return exitFor(docs);
}

int cmdTable(const RunConfig& cfg) {
  std::vector<GroupCase> cases;
  if (cfg.group.empty()) {
    for (Family f : {Family::SU, Family::Sp, Family::SOodd, Family::SOeven, Family::SOstar})
      cases.push_back(caseFor(f, cfg));
  } else {
    cases.push_back(caseFor(*parseFamily(cfg.group), cfg));
  }
  std::vector<CaseDocument> docs;
  for (const auto& g : cases)
    docs.push_back(buildDocument(g, selectedForms(g, cfg.group.empty() ? "all" : cfg.form), cfg));
  emitDocs(docs, cfg.format);
  return exitFor(docs);
}

int cmdVerify(const RunConfig& cfg) {
  VerifyConfig vc;
  vc.maxRank = cfg.maxRank;
  vc.workers = cfg.workers;
  vc.seed = cfg.seed;
  vc.termCap = cfg.termCap;
  vc.injectFault = cfg.injectFault;
  VerifyReport rep = runVerification(vc);
  if (cfg.format == "text") std::cout << rep.toText();
  else std::cout << rep.toJson().dump(2) << "\n";
  return rep.passed() ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac index constants of classical equal-rank groups, by brute force and closed form"};
  app.require_subcommand(1);

  RunConfig rf, cst, ver, tab;
  auto* subRF = app.add_subcommand("real-forms", "list real forms with h, weighted Dynkin labels and tableaux");
  addCommon(subRF, rf, "both", "text");
  auto* subC = app.add_subcommand("constant", "compute the constant of one or all real forms");
  addCommon(subC, cst, "both", "text");
  auto* subV = app.add_subcommand("verify", "run the acceptance checks and print a summary");
  addCommon(subV, ver, "both", "json");
  auto* subT = app.add_subcommand("table", "closed forms and values, per family and real form");
  addCommon(subT, tab, "closed", "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (subRF->parsed()) {
      noteGiven(subRF, rf);
      return cmdRealForms(rf);
    }
    if (subC->parsed()) {
      noteGiven(subC, cst);
      return cmdConstant(cst);
    }
    if (subV->parsed()) {
      noteGiven(subV, ver);
      return cmdVerify(ver);
    }
    noteGiven(subT, tab);
    return cmdTable(tab);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::NonIntegerQuotient:
      case ErrorKind::OrthogonalityViolated:
      case ErrorKind::HypothesisFailed:
        return kDisagree;
      default:
        return kUsage;
    }
  }
}

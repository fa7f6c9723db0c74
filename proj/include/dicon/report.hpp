#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "constants.hpp"

namespace dicon {

using Json = nlohmann::ordered_json;

/// All reported forms of one group case.
struct CaseDocument {
  GroupCase group;
  std::vector<ConstantReport> forms;
  /// Symbolic closed forms, parallel to `forms`; empty when not requested.
  std::vector<std::string> expressions;
};

inline Json integerJson(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Integer integerFromJson(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  fail(ErrorKind::InvalidArgument, "expected an integer");
}

inline Json weightJson(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(toString(x));
  return a;
}

inline Weight weightFromJson(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, "weight must be an array");
  Weight w;
  for (const auto& x : j) {
    if (!x.is_string()) fail(ErrorKind::InvalidArgument, "weight entries must be rational strings");
    w.push_back(parseRational(x.get<std::string>()));
  }
  return w;
}

inline Json paramsJson(const GroupCase& g) {
  Json params = Json::object();
  if (g.usesPQ()) {
    params["p"] = g.p;
    params["q"] = g.q;
  } else {
    params["n"] = g.n;
  }
  return params;
}

inline Json toJson(const CaseDocument& doc) {
  Json j;
  j["case"] = {{"family", familyKey(doc.group.family)}, {"params", paramsJson(doc.group)}};
  Json forms = Json::array();
  for (std::size_t i = 0; i < doc.forms.size(); ++i) {
    const ConstantReport& r = doc.forms[i];
    Json f;
    f["index"] = r.form.index;
    f["label"] = r.form.label;
    f["h"] = weightJson(r.form.h);
    f["N"] = r.bigN;
    f["cClosed"] = integerJson(r.cClosed);
    if (i < doc.expressions.size()) f["closedForm"] = doc.expressions[i];
    if (r.cBrute) {
      f["cBrute"] = integerJson(*r.cBrute);
      Json ls = Json::array();
      for (const auto& l : r.lambdaUsed) ls.push_back(weightJson(l));
      f["lambdaUsed"] = ls;
      f["termCount"] = r.termCount;
      f["survivingTermCount"] = r.survivingTermCount;
    }
    if (r.agree) f["agree"] = *r.agree;
    forms.push_back(std::move(f));
  }
  j["forms"] = std::move(forms);
  return j;
}

/// Schema violations of a case document; empty when valid.
inline std::vector<std::string> validateCaseJson(const Json& j) {
  std::vector<std::string> errs;
  auto need = [&](const Json& obj, const char* key, auto pred, const char* what) {
    if (!obj.is_object() || !obj.contains(key) || !pred(obj.at(key))) {
      errs.push_back(std::string("'") + key + "' must be " + what);
      return false;
    }
    return true;
  };
  auto isObj = [](const Json& x) { return x.is_object(); };
  auto isArr = [](const Json& x) { return x.is_array(); };
  auto isInt = [](const Json& x) { return x.is_number_integer(); };
  auto isStr = [](const Json& x) { return x.is_string(); };
  auto isBigInt = [](const Json& x) {
    if (x.is_number_integer()) return true;
    Integer z;
    return x.is_string() && z.set_str(x.get<std::string>(), 10) == 0;
  };
  auto isRationalArray = [](const Json& x) {
    if (!x.is_array()) return false;
    for (const auto& e : x) {
      Rational r;
      if (!e.is_string() || r.set_str(e.get<std::string>(), 10) != 0) return false;
    }
    return true;
  };
  if (!j.is_object()) return {"document must be an object"};
  if (need(j, "case", isObj, "an object")) {
    const Json& c = j.at("case");
    if (need(c, "family", isStr, "a string") && !parseFamily(c.at("family").get<std::string>()))
      errs.push_back("unknown family");
    need(c, "params", isObj, "an object");
  }
  if (need(j, "forms", isArr, "an array")) {
    for (const auto& f : j.at("forms")) {
      need(f, "index", isInt, "an integer");
      need(f, "label", isStr, "a string");
      need(f, "h", isRationalArray, "an array of rational strings");
      need(f, "N", isInt, "an integer");
      need(f, "cClosed", isBigInt, "an integer");
      if (f.contains("cBrute")) need(f, "cBrute", isBigInt, "an integer");
      if (f.contains("agree") && !f.at("agree").is_boolean()) errs.push_back("'agree' must be a boolean");
      if (f.contains("lambdaUsed")) {
        if (!f.at("lambdaUsed").is_array()) errs.push_back("'lambdaUsed' must be an array");
        else
          for (const auto& l : f.at("lambdaUsed"))
            if (!isRationalArray(l)) errs.push_back("'lambdaUsed' entries must be rational arrays");
      }
    }
  }
  return errs;
}

inline CaseDocument caseFromJson(const Json& j) {
  auto errs = validateCaseJson(j);
  if (!errs.empty()) fail(ErrorKind::InvalidArgument, "schema: " + errs.front());
  CaseDocument doc;
  const Json& c = j.at("case");
  doc.group.family = *parseFamily(c.at("family").get<std::string>());
  const Json& params = c.at("params");
  doc.group.p = params.value("p", 0);
  doc.group.q = params.value("q", 0);
  doc.group.n = params.value("n", 0);
  doc.group.validate();
  for (const auto& f : j.at("forms")) {
    ConstantReport r;
    r.form.index = f.at("index").get<int>();
    r.form.label = f.at("label").get<std::string>();
    r.form.h = weightFromJson(f.at("h"));
    r.form.existsCondition = findForm(realForms(doc.group), r.form.index).existsCondition;
    r.bigN = f.at("N").get<int>();
    r.cClosed = integerFromJson(f.at("cClosed"));
    if (f.contains("closedForm")) doc.expressions.push_back(f.at("closedForm").get<std::string>());
    if (f.contains("cBrute")) r.cBrute = integerFromJson(f.at("cBrute"));
    if (f.contains("lambdaUsed"))
      for (const auto& l : f.at("lambdaUsed")) r.lambdaUsed.push_back(weightFromJson(l));
    r.termCount = f.value("termCount", std::uint64_t{0});
    r.survivingTermCount = f.value("survivingTermCount", std::uint64_t{0});
    if (f.contains("agree")) r.agree = f.at("agree").get<bool>();
    doc.forms.push_back(std::move(r));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180)

inline std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string csvRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csvField(fields[i]);
  }
  return out + "\r\n";
}

inline std::string paramsText(const GroupCase& g) {
  if (g.usesPQ()) return "p=" + std::to_string(g.p) + " q=" + std::to_string(g.q);
  return "n=" + std::to_string(g.n);
}

inline std::string hText(const GroupCase& g, const Weight& h) {
  // blocks separated by | as in the h displays
  std::string s = "(";
  const std::size_t split = g.usesPQ() ? static_cast<std::size_t>(g.p) : h.size();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i == split && i != 0) s += " | ";
    else if (i) s += ", ";
    s += toString(h[i]);
  }
  return s + ")";
}

inline std::string toCsv(const std::vector<CaseDocument>& docs) {
  std::string out = csvRow({"family", "params", "index", "label", "h", "N", "closedForm", "cClosed", "cBrute", "agree"});
  for (const auto& d : docs)
    for (std::size_t i = 0; i < d.forms.size(); ++i) {
      const auto& r = d.forms[i];
      out += csvRow({familyKey(d.group.family), paramsText(d.group), std::to_string(r.form.index), r.form.label,
                     hText(d.group, r.form.h), std::to_string(r.bigN), i < d.expressions.size() ? d.expressions[i] : "",
                     toString(r.cClosed), r.cBrute ? toString(*r.cBrute) : "",
                     r.agree ? (*r.agree ? "true" : "false") : ""});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Plain text

inline std::string toText(const std::vector<CaseDocument>& docs) {
  std::ostringstream os;
  for (const auto& d : docs) {
    os << d.group.name() << "  (" << paramsText(d.group) << ")\n";
    for (std::size_t i = 0; i < d.forms.size(); ++i) {
      const auto& r = d.forms[i];
      os << "  form " << r.form.index << " [" << r.form.label << "]  h=" << hText(d.group, r.form.h) << "  N=" << r.bigN
         << "\n    closed: " << toString(r.cClosed);
      if (i < d.expressions.size()) os << "   = " << d.expressions[i];
      if (r.cBrute) os << "\n    brute:  " << toString(*r.cBrute) << "   (" << r.termCount << " terms, "
                        << r.survivingTermCount << " nonzero)";
      if (r.agree) os << "\n    " << (*r.agree ? "agree" : "DISAGREE");
      os << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// LaTeX

inline std::string latexPartition(const Partition& parts) {
  std::ostringstream os;
  os << "[";
  std::size_t i = 0;
  bool first = true;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) os << ",";
    os << parts[i];
    if (j - i > 1) os << "^{" << j - i << "}";
    first = false;
    i = j;
  }
  os << "]";
  return os.str();
}

inline std::string latexWeight(const GroupCase& g, const Weight& h) {
  std::string s = hText(g, h);
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\,|\\,";
    else out += ch;
  }
  return out;
}

inline std::string toLatex(const std::vector<CaseDocument>& docs) {
  std::ostringstream os;
  os << "\\begin{tabular}{lllll}\n\\hline\n"
     << "$G_\\mathbb{R}$ & $\\mathcal{O}^\\mathbb{C}$ & Real forms & Constants & Value \\\\\n\\hline\n";
  for (const auto& d : docs) {
    for (std::size_t i = 0; i < d.forms.size(); ++i) {
      const auto& r = d.forms[i];
      if (i == 0) os << "$" << d.group.latexName() << "$ & $" << latexPartition(orbitPartition(d.group)) << "$";
      else os << " & ";
      os << " & $h=" << latexWeight(d.group, r.form.h) << "$ & $"
         << (i < d.expressions.size() ? d.expressions[i] : toString(r.cClosed)) << "$ & $" << toString(r.cClosed)
         << "$ \\\\\n";
    }
    os << "\\hline\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace dicon

#include "render.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace cyccov::cli {

namespace {

std::string row_label(Int q) { return fmt::format("L-{}M", q); }

std::string cell(const SigmaTable& t, Int q, Int k) {
  const auto v = t.value(q, k);
  return v ? std::to_string(*v) : "";
}

}  // namespace

std::string render_sigma_table(const SigmaTable& t, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::plain: {
      out += fmt::format("{:<7}", "k");
      for (Int k = 0; k <= t.k_max(); ++k) out += fmt::format("{:>4}", k);
      out += "\n";
      for (Int q = 1; q <= t.max_q(); ++q) {
        std::string line = fmt::format("{:<7}", row_label(q));
        for (Int k = 0; k <= t.k_max(); ++k) line += fmt::format("{:>4}", cell(t, q, k));
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
      }
      break;
    }
    case OutputFormat::markdown: {
      out += "| k |";
      for (Int k = 0; k <= t.k_max(); ++k) out += fmt::format(" {} |", k);
      out += "\n|---|";
      for (Int k = 0; k <= t.k_max(); ++k) out += "---:|";
      out += "\n";
      for (Int q = 1; q <= t.max_q(); ++q) {
        out += fmt::format("| {} |", row_label(q));
        for (Int k = 0; k <= t.k_max(); ++k) {
          const std::string c = cell(t, q, k);
          out += c.empty() ? " |" : fmt::format(" {} |", c);
        }
        out += "\n";
      }
      break;
    }
    case OutputFormat::csv: {
      out += "q\\k";
      for (Int k = 0; k <= t.k_max(); ++k) out += fmt::format(",{}", k);
      out += "\n";
      for (Int q = 1; q <= t.max_q(); ++q) {
        out += std::to_string(q);
        for (Int k = 0; k <= t.k_max(); ++k) out += "," + cell(t, q, k);
        out += "\n";
      }
      break;
    }
    case OutputFormat::records: {
      for (const auto& [qk, v] : t.entries()) {
        nlohmann::ordered_json j = {
            {"record", "sigma"}, {"d", t.degree()}, {"q", qk.first}, {"k", qk.second}, {"sigma", v}};
        out += j.dump() + "\n";
      }
      break;
    }
  }
  return out;
}

std::string render_order_check(const OrderCheck& check) {
  std::string out;
  for (const auto& c : check.checks) {
    if (!out.empty()) out += "; ";
    out += fmt::format("q={} need {} have {} {}", c.q, c.required, c.available, c.satisfied ? "ok" : "FAIL");
  }
  return out;
}

namespace {

std::string status(const ClaimOutcome& o) {
  if (o.holds) return "PASS";
  return o.claim.informational ? "NOTE" : "FAIL";
}

std::string source(const ExpectedClaim& c) { return c.source == ClaimSource::literature ? "literature" : "derived"; }

}  // namespace

std::string render_claims(const std::vector<ClaimLine>& lines, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::markdown) out += "| status | entry | kind | claim | observed | source | statement |\n|---|---|---|---|---:|---|---|\n";
  if (format == OutputFormat::csv) out += "status,entry,kind,comparison,value,observed,source,informational\n";
  for (const auto& [id, o] : lines) {
    const ExpectedClaim& c = o.claim;
    switch (format) {
      case OutputFormat::plain:
        out += fmt::format("{} {} {} k* {} {} (observed {}) [{}{}] {}\n", status(o), id, to_string(c.kind),
                           to_string(c.comparison), c.value, o.observed, source(c),
                           c.informational ? ", informational" : "", c.statement);
        break;
      case OutputFormat::markdown:
        out += fmt::format("| {} | {} | {} | k* {} {} | {} | {} | {} |\n", status(o), id, to_string(c.kind),
                           to_string(c.comparison), c.value, o.observed, source(c), c.statement);
        break;
      case OutputFormat::csv:
        out += fmt::format("{},{},{},{},{},{},{},{}\n", status(o), id, to_string(c.kind), to_string(c.comparison),
                           c.value, o.observed, source(c), c.informational ? 1 : 0);
        break;
      case OutputFormat::records: {
        nlohmann::ordered_json j = {{"record", "claim"},
                                    {"status", status(o)},
                                    {"entry", id},
                                    {"kind", to_string(c.kind)},
                                    {"comparison", to_string(c.comparison)},
                                    {"value", c.value},
                                    {"observed", o.observed},
                                    {"source", source(c)},
                                    {"informational", c.informational},
                                    {"statement", c.statement}};
        out += j.dump() + "\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace cyccov::cli

#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "rdpforge/syntax.hpp"

namespace rdpforge::cli {

namespace {

Json witness_list(const std::vector<Witness>& ws) {
    Json out = Json::array();
    for (const Witness& w : ws) {
        Json elems = Json::array();
        for (const Elem& e : w.elems) elems.push_back(format_elem(e));
        Json j;
        j["label"] = w.label;
        j["elems"] = std::move(elems);
        out.push_back(std::move(j));
    }
    return out;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_witnesses(std::ostringstream& os, const char* title, const Json& list) {
    if (!list.is_array() || list.empty()) return;
    os << title << ":\n";
    for (const Json& w : list) {
        os << "  " << w.value("label", "") << ":";
        const Json& elems = w.at("elems");
        for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? ", " : " ") << elems[i].get<std::string>();
        os << "\n";
    }
}

void render_table(std::ostringstream& os, const Json& t, const Json& quad) {
    const std::string c[2][2] = {{t.at("c11").get<std::string>(), t.at("c12").get<std::string>()},
                                 {t.at("c21").get<std::string>(), t.at("c22").get<std::string>()}};
    std::string row[2] = {"a1", "a2"}, col[2] = {"b1", "b2"};
    if (quad.is_array() && quad.size() == 4) {
        row[0] += " = " + quad[0].get<std::string>();
        row[1] += " = " + quad[1].get<std::string>();
        col[0] += " = " + quad[2].get<std::string>();
        col[1] += " = " + quad[3].get<std::string>();
    }
    std::size_t w0 = std::max(row[0].size(), row[1].size());
    std::size_t w1 = std::max({col[0].size(), c[0][0].size(), c[1][0].size()});
    std::size_t w2 = std::max({col[1].size(), c[0][1].size(), c[1][1].size()});
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    os << "table:\n";
    os << "  " << pad("", w0) << " | " << pad(col[0], w1) << " | " << col[1] << "\n";
    os << "  " << std::string(w0, '-') << "-+-" << std::string(w1, '-') << "-+-" << std::string(w2, '-') << "\n";
    for (int i = 0; i < 2; ++i) os << "  " << pad(row[i], w0) << " | " << pad(c[i][0], w1) << " | " << c[i][1] << "\n";
}

}  // namespace

Json report_json(const std::string& command, const std::string& descriptor, Json parameters, const VerdictReport& r) {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["descriptor"] = descriptor;
    j["parameters"] = parameters.is_null() ? Json::object() : std::move(parameters);
    j["verdict"] = to_string(r.verdict);
    j["mode"] = to_string(r.mode);
    j["note"] = r.note;
    j["failed"] = r.failed;
    j["witnesses"] = witness_list(r.witnesses);
    j["counterexamples"] = witness_list(r.counterexamples);
    Json stats;
    stats["checked"] = r.stats.checked;
    stats["elapsed_ms"] = r.stats.elapsed_ms;
    stats["seed"] = r.stats.seed;
    stats["radius"] = r.stats.radius;
    j["stats"] = std::move(stats);
    return j;
}

Json error_json(const std::string& command, const std::string& type, const std::string& message, int line,
                int column) {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    Json e;
    e["type"] = type;
    e["message"] = message;
    if (line > 0) {
        e["line"] = line;
        e["column"] = column;
    }
    j["error"] = std::move(e);
    return j;
}

std::string render_text(const Json& doc) {
    std::ostringstream os;
    if (doc.contains("error")) {
        const Json& e = doc.at("error");
        os << "error (" << e.value("type", "") << "): " << e.value("message", "") << "\n";
        return os.str();
    }
    os << "command: " << doc.value("command", "") << "\n";
    if (doc.contains("descriptor")) os << "group: " << doc.at("descriptor").get<std::string>() << "\n";
    if (doc.contains("parameters") && !doc.at("parameters").empty()) {
        os << "parameters:";
        for (const auto& [k, v] : doc.at("parameters").items()) os << " " << k << "=" << scalar_text(v);
        os << "\n";
    }
    os << "verdict: " << doc.value("verdict", "") << " (" << doc.value("mode", "") << ")\n";
    if (!doc.value("note", "").empty()) os << "note: " << doc.at("note").get<std::string>() << "\n";
    if (doc.contains("failed") && !doc.at("failed").empty()) {
        os << "failed:";
        for (const Json& f : doc.at("failed")) os << " " << f.get<std::string>();
        os << "\n";
    }
    if (doc.contains("engine")) os << "engine: " << doc.at("engine").get<std::string>() << "\n";
    if (doc.contains("case")) os << "case: " << doc.at("case").get<std::string>() << "\n";
    if (doc.contains("table")) {
        const Json& params = doc.at("parameters");
        render_table(os, doc.at("table"), params.contains("elems") ? params.at("elems") : Json());
    }
    render_witnesses(os, "witnesses", doc.value("witnesses", Json::array()));
    render_witnesses(os, "counterexamples", doc.value("counterexamples", Json::array()));
    if (doc.contains("frontier")) {
        os << "frontier:";
        for (const auto& [k, v] : doc.at("frontier").items()) os << " " << k << "=" << scalar_text(v);
        os << "\n";
    }
    if (doc.contains("stats")) {
        const Json& s = doc.at("stats");
        os << "stats: checked=" << scalar_text(s.at("checked")) << " radius=" << scalar_text(s.at("radius"))
           << " seed=" << scalar_text(s.at("seed")) << " elapsed_ms=" << scalar_text(s.at("elapsed_ms")) << "\n";
    }
    return os.str();
}

ExitCode exit_code_of(const Json& doc) {
    if (doc.contains("error")) return ExitCode::Usage;
    const std::string v = doc.value("verdict", "");
    if (v == "pass") return ExitCode::Pass;
    if (v == "fail") return ExitCode::Fail;
    if (v == "inconclusive") return ExitCode::Inconclusive;
    return ExitCode::Usage;
}

}  // namespace rdpforge::cli

#include "bqcli/report.hpp"

#include <sstream>

namespace bq::cli {

Json dim_json(const DimValue& d)
{
    Json j;
    j["kind"] = d.kind_name();
    if (d.is_infinite())
        j["value"] = nullptr;
    else
        j["value"] = d.value;
    j["certificate"] = d.certificate;
    return j;
}

Json report_header(const std::string& command, std::size_t bound, unsigned seed)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["bound"] = bound;
    j["seed"] = seed;
    return j;
}

namespace {

bool is_dim(const Json& j)
{
    return j.is_object() && j.size() == 3 && j.contains("kind") && j.contains("value") && j.contains("certificate");
}

std::string scalar_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    if (is_dim(j)) {
        std::string v = j["kind"] == "infinite" ? "inf"
                        : j["kind"] == "at_least" ? ">=" + j["value"].dump()
                                                  : j["value"].dump();
        return v + " (" + j["kind"].get<std::string>() + "; " + j["certificate"].get<std::string>() + ")";
    }
    return j.dump();
}

// Arrays of scalars print inline.
bool inline_array(const Json& j)
{
    if (!j.is_array())
        return false;
    for (const auto& x : j)
        if (x.is_structured())
            return false;
    return true;
}

void render(std::ostringstream& o, const Json& j, int indent);

void render_value(std::ostringstream& o, const std::string& prefix, const Json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
        o << pad << prefix << "|\n";
        std::istringstream lines(v.get<std::string>());
        for (std::string line; std::getline(lines, line);)
            o << pad << "  " << line << "\n";
    } else if (is_dim(v) || !v.is_structured()) {
        std::string line = prefix + scalar_text(v);
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        o << pad << line << "\n";
    } else if (inline_array(v)) {
        o << pad << prefix << "[";
        bool first = true;
        for (const auto& x : v) {
            o << (first ? "" : ", ") << scalar_text(x);
            first = false;
        }
        o << "]\n";
    } else if (v.empty()) {
        o << pad << prefix << (v.is_array() ? "[]" : "{}") << "\n";
    } else {
        std::string head = prefix;
        while (!head.empty() && head.back() == ' ')
            head.pop_back();
        o << pad << head << "\n";
        render(o, v, indent + 2);
    }
}

void render(std::ostringstream& o, const Json& j, int indent)
{
    if (is_dim(j)) {
        render_value(o, "", j, indent);
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            render_value(o, k + ": ", v, indent);
    } else if (j.is_array()) {
        for (const auto& v : j)
            render_value(o, "- ", v, indent);
    } else {
        render_value(o, "", j, indent);
    }
}

}  // namespace

std::string emit_report(const Json& report, Format f)
{
    if (f == Format::structured)
        return report.dump(2) + "\n";
    std::ostringstream o;
    render(o, report, 0);
    return o.str();
}

}  // namespace bq::cli

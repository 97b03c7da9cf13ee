#include "algdef/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algdef/errors.hpp"

namespace algdef {

using nlohmann::json;

std::string serialize_algebra(const NamedAlgebra& algebra)
{
    const MulTable& x = algebra.table;
    const std::size_t n = x.dim();
    std::ostringstream out;
    out << "{\"name\": " << json(algebra.name).dump() << ", \"dim\": " << n << ", \"field\": \"rational\",\n";
    out << " \"table\": [";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                if (sgn(x(i, j, l)) == 0)
                    continue;
                out << (first ? "\n" : ",\n");
                out << "  {\"i\": " << i << ", \"j\": " << j << ", \"l\": " << l << ", \"c\": \""
                    << to_string(x(i, j, l)) << "\"}";
                first = false;
            }
    out << (first ? "]}\n" : "\n ]}\n");
    return out.str();
}

namespace {

// 1-based source line of every object that opens directly inside the `table`
// array (nesting depth two), in order. Only used to locate errors.
std::vector<std::size_t> record_lines(std::string_view text)
{
    std::vector<std::size_t> lines;
    std::size_t line = 1;
    int depth = 0;
    bool in_string = false;
    for (std::size_t p = 0; p < text.size(); ++p) {
        const char ch = text[p];
        if (ch == '\n')
            ++line;
        if (in_string) {
            if (ch == '\\')
                ++p;
            else if (ch == '"')
                in_string = false;
            continue;
        }
        if (ch == '"')
            in_string = true;
        else if (ch == '{' || ch == '[') {
            if (ch == '{' && depth == 2)
                lines.push_back(line);
            ++depth;
        } else if (ch == '}' || ch == ']')
            --depth;
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string raw_triple(const json& rec)
{
    auto part = [&](const char* key) { return rec.contains(key) ? rec.at(key).dump() : std::string("?"); };
    return "(i,j,l) = (" + part("i") + "," + part("j") + "," + part("l") + ")";
}

std::size_t index_field(const json& rec, const char* key, std::size_t dim, std::size_t line)
{
    if (!rec.contains(key))
        fail(line, std::string("table record ") + raw_triple(rec) + " is missing field \"" + key + "\"");
    const json& v = rec.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(line, std::string("field \"") + key + "\" of " + raw_triple(rec) + " must be a non-negative integer");
    const auto value = v.get<unsigned long long>();
    if (value >= dim)
        fail(line, std::string("field \"") + key + "\" = " + std::to_string(value) + " is out of range for dim " +
                       std::to_string(dim) + " in " + raw_triple(rec));
    return static_cast<std::size_t>(value);
}

}  // namespace

NamedAlgebra parse_algebra(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object())
        fail(1, "top level must be an object");
    NamedAlgebra out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            fail(1, "field \"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        fail(1, "field \"dim\" must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    if (doc.contains("field") && doc["field"] != "rational")
        fail(1, "field \"field\" must be \"rational\"");
    if (!doc.contains("table") || !doc["table"].is_array())
        fail(1, "field \"table\" must be an array");

    const std::vector<std::size_t> lines = record_lines(text);
    MulTable x(dim);
    std::vector<bool> seen(dim * dim * dim, false);
    const json& table = doc["table"];
    for (std::size_t r = 0; r < table.size(); ++r) {
        const std::size_t line = r < lines.size() ? lines[r] : 1;
        const json& rec = table[r];
        if (!rec.is_object())
            fail(line, "table record " + std::to_string(r) + " is not an object");
        const std::size_t i = index_field(rec, "i", dim, line);
        const std::size_t j = index_field(rec, "j", dim, line);
        const std::size_t l = index_field(rec, "l", dim, line);
        const std::string triple = "(i,j,l) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(l) + ")";
        if (!rec.contains("c") || !rec["c"].is_string())
            fail(line, "field \"c\" of " + triple + " must be a rational string");
        try {
            x(i, j, l) = parse_rational(rec["c"].get<std::string>());
        } catch (const ParseError& e) {
            fail(line, "field \"c\" of " + triple + ": " + e.what());
        }
        if (seen[CanonicalIndex::idx(dim, i, j, l)])
            fail(line, "duplicate record for " + triple);
        seen[CanonicalIndex::idx(dim, i, j, l)] = true;
    }
    out.table = std::move(x);
    return out;
}

NamedAlgebra read_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

}  // namespace algdef

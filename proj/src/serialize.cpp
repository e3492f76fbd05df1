#include "fockcb/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace fockcb {

namespace {

Json big_to_json(const BigInt& c)
{
    if (c.fits_slong_p()) return Json(static_cast<std::int64_t>(c.get_si()));
    return Json(c.get_str());
}

BigInt big_from_json(const Json& j)
{
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer coefficient, got " + j.dump());
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

}  // namespace

Json to_json(const LaurentInt& x)
{
    Json out = Json::array();
    for (const auto& [e, c] : x.terms()) out.push_back(Json::array({e, big_to_json(c)}));
    return out;
}

LaurentInt laurent_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected a list of [exponent, coefficient] pairs");
    LaurentInt x;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw std::invalid_argument("malformed term " + t.dump());
        x.add_term(t[0].get<int>(), big_from_json(t[1]));
    }
    return x;
}

Json to_json(const FockVec& x)
{
    Json out = Json::array();
    for (const auto& [p, c] : x.sorted_terms()) out.push_back({{"partition", p.to_string()}, {"coeff", to_json(c)}});
    return out;
}

FockVec fock_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected a list of terms");
    FockVec x;
    for (const auto& t : j) x.add(parse_partition(t.at("partition").get<std::string>()), laurent_from_json(t.at("coeff")));
    return x;
}

Json to_json(const DecompMatrix& m)
{
    if (m.order.empty()) return Json::array();
    Json order = Json::array(), rows = Json::array();
    for (const auto& p : m.order) order.push_back(p.to_string());
    for (const auto& r : m.entries) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(to_json(c));
        rows.push_back(std::move(row));
    }
    return {{"n", m.block.n},        {"core", m.block.core.to_string()}, {"w", m.block.weight_w},
            {"minus", m.minus},      {"order", std::move(order)},         {"rows", std::move(rows)}};
}

DecompMatrix matrix_from_json(const Json& j)
{
    DecompMatrix m;
    if (j.is_array() && j.empty()) return m;
    m.block = BlockId{j.at("n").get<int>(), parse_partition(j.at("core").get<std::string>()), j.at("w").get<int>()};
    m.minus = j.at("minus").get<bool>();
    for (const auto& p : j.at("order")) m.order.push_back(parse_partition(p.get<std::string>()));
    for (const auto& r : j.at("rows")) {
        std::vector<LaurentInt> row;
        for (const auto& c : r) row.push_back(laurent_from_json(c));
        if (row.size() != m.order.size()) throw std::invalid_argument("matrix row has the wrong length");
        m.entries.push_back(std::move(row));
    }
    if (m.entries.size() != m.order.size()) throw std::invalid_argument("matrix is not square");
    m.triangular_order = m.order;
    return m;
}

std::string to_table(const FockVec& x)
{
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 0;
    for (const auto& [p, c] : x.sorted_terms()) {
        rows.emplace_back(c.to_string(), p.to_string());
        width = std::max(width, rows.back().first.size());
    }
    std::ostringstream os;
    for (const auto& [c, p] : rows) os << pad(c, width) << "  " << p << '\n';
    return os.str();
}

std::string to_table(const DecompMatrix& m)
{
    if (m.order.empty()) return "";
    std::vector<std::vector<std::string>> cells;
    cells.push_back({""});
    for (const auto& p : m.order) cells.front().push_back(p.to_string());
    for (std::size_t r = 0; r < m.order.size(); ++r) {
        std::vector<std::string> row{m.order[r].to_string()};
        for (const auto& c : m.entries[r]) row.push_back(c.is_zero() ? "." : c.to_string());
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) line += (c ? "  " : "") + pad(row[c], width[c]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace fockcb

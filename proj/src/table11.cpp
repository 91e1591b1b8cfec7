#include "parteq/table11.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "parteq/bijections.hpp"
#include "parteq/enumerate.hpp"

namespace parteq {

namespace {

std::string join_parts(const Partition& p)
{
    if (p.empty())
        return "ε";
    std::string out;
    for (int v : p) {
        if (!out.empty())
            out += '+';
        out += std::to_string(v);
    }
    return out;
}

std::vector<std::string> lines(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

} // namespace

std::vector<PartitionPair> table11_order()
{
    auto rows = enumerate_C(11);
    auto key = [](const PartitionPair& p) {
        return std::make_tuple(p.beta.length(), p.beta.weight(), p.alpha.length());
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const PartitionPair& a, const PartitionPair& b) {
        if (key(a) != key(b))
            return key(a) < key(b);
        if (a.beta != b.beta)
            return a.beta > b.beta;
        return a.alpha > b.alpha;
    });
    return rows;
}

std::string table_text(const PartitionPair& pair)
{
    return "(" + join_parts(pair.alpha) + ", " + join_parts(pair.beta) + ")";
}

std::string table_text(const BicoloredPartition& lambda)
{
    if (lambda.empty())
        return "ε";
    std::string out;
    for (const auto& e : lambda.entries()) {
        if (!out.empty())
            out += '+';
        out += std::to_string(e.value);
        if (e.color == Color::red)
            out += 'r';
    }
    return out;
}

std::vector<std::string> table11_rows()
{
    std::vector<std::string> out;
    for (const auto& pair : table11_order())
        out.push_back(table_text(pair) + " -> " + table_text(apply_h(pair)));
    return out;
}

std::vector<std::string> table11_mismatches()
{
    const auto computed = table11_rows();
    const auto golden = lines(table11_golden());
    std::vector<std::string> out;
    const std::size_t n = std::max(computed.size(), golden.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string want = i < golden.size() ? golden[i] : "<missing>";
        const std::string got = i < computed.size() ? computed[i] : "<missing>";
        if (want != got)
            out.push_back("row " + std::to_string(i + 1) + ": expected '" + want + "', got '" +
                          got + "'");
    }
    return out;
}

} // namespace parteq

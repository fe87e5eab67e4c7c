#pragma once

#include <string>
#include <vector>

#include "gq/category.hpp"
#include "gq/documents.hpp"
#include "gq/heap.hpp"

namespace gqtest {

inline gq::BraidedQuiver builtin_solution(const std::string& name, int param = -1) {
    std::optional<int> p;
    if (param >= 0)
        p = param;
    return gq::solution_from_document(gq::builtin_example(name, p));
}

inline gq::Presentation builtin_presentation(const std::string& name) {
    return gq::builtin_example(name, std::nullopt).as_presentation();
}

inline gq::PathWord path(const gq::Quiver& q, const std::string& text) {
    return gq::parse_path(q, text);
}

// Z/k addition on decimal-named elements.
inline gq::GroupTable cyclic(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i)
        names.push_back(std::to_string(i));
    std::sort(names.begin(), names.end());
    auto idx = [&](int v) {
        auto it = std::find(names.begin(), names.end(), std::to_string(v));
        return static_cast<int>(it - names.begin());
    };
    std::vector<int> mul(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            mul[static_cast<size_t>(a) * k + b] =
                idx((std::stoi(names[a]) + std::stoi(names[b])) % k);
    return gq::GroupTable::build(std::move(names), std::move(mul), idx(0));
}

inline gq::GroupTable klein4() {
    std::vector<std::string> names{"00", "01", "10", "11"};
    auto val = [](const std::string& s) { return (s[0] - '0') * 2 + (s[1] - '0'); };
    std::vector<int> mul(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            mul[a * 4 + b] = val(names[a]) ^ val(names[b]);
    return gq::GroupTable::build(names, mul, 0);
}

// symmetric group on three letters, elements named by their one-line images
inline gq::GroupTable sym3() {
    std::vector<std::string> names{"123", "132", "213", "231", "312", "321"};
    std::sort(names.begin(), names.end());
    auto apply = [](const std::string& p, int i) { return p[i] - '1'; };
    auto idx = [&](const std::string& s) {
        return static_cast<int>(std::lower_bound(names.begin(), names.end(), s) -
                                names.begin());
    };
    std::vector<int> mul(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::string r = "___";  // x -> g(f(x)), left-to-right composition
            for (int i = 0; i < 3; ++i)
                r[i] = static_cast<char>('1' + apply(names[b], apply(names[a], i)));
            mul[static_cast<size_t>(a) * 6 + b] = idx(r);
        }
    return gq::GroupTable::build(names, mul, idx("123"));
}

// All total ternary tables on {"0","1"}; 2^8 of them.
inline std::vector<gq::TernaryOp> all_two_element_ternary_ops() {
    std::vector<gq::TernaryOp> out;
    for (int mask = 0; mask < 256; ++mask) {
        std::vector<int> table(8);
        for (int i = 0; i < 8; ++i)
            table[i] = (mask >> i) & 1;
        out.push_back(gq::TernaryOp::from_table({"0", "1"}, table));
    }
    return out;
}

}  // namespace gqtest

#include <algorithm>
#include <map>

#include "gq/documents.hpp"

namespace gq {

namespace {

GroupTable cyclic_group(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i)
        names.push_back(std::to_string(i));
    std::sort(names.begin(), names.end());
    std::map<std::string, int> index;
    for (int i = 0; i < k; ++i)
        index[names[i]] = i;
    std::vector<int> mul(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int va = std::stoi(names[a]), vb = std::stoi(names[b]);
            mul[static_cast<size_t>(a) * k + b] = index[std::to_string((va + vb) % k)];
        }
    return GroupTable::build(std::move(names), std::move(mul), index["0"]);
}

GroupTable bitvector_group(int n) {
    int k = 1 << n;
    std::vector<std::string> names;
    for (int v = 0; v < k; ++v) {
        std::string s(n, '0');
        for (int bit = 0; bit < n; ++bit)
            if (v & (1 << (n - 1 - bit)))
                s[bit] = '1';
        names.push_back(s);
    }
    std::sort(names.begin(), names.end());
    auto value = [&](const std::string& s) {
        int v = 0;
        for (char ch : s)
            v = (v << 1) | (ch - '0');
        return v;
    };
    std::map<int, int> index;
    for (int i = 0; i < k; ++i)
        index[value(names[i])] = i;
    std::vector<int> mul(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            mul[static_cast<size_t>(a) * k + b] = index[value(names[a]) ^ value(names[b])];
    return GroupTable::build(std::move(names), std::move(mul), index[0]);
}

Document heap_solution(const GroupTable& g) {
    return wrap(solution_from_ternary(heap_from_group(g)));
}

Document pres0() {
    std::vector<std::string> vertices;
    for (int v = 1; v <= 8; ++v)
        vertices.push_back(std::to_string(v));
    const std::pair<int, int> arcs[] = {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3},
                                        {4, 1}, {1, 4}, {5, 6}, {6, 5}, {6, 7}, {7, 6},
                                        {7, 8}, {8, 7}, {8, 5}, {5, 8}, {1, 5}, {5, 1},
                                        {4, 8}, {8, 4}, {2, 6}, {6, 2}, {3, 7}, {7, 3}};
    std::vector<ArrowSpec> arrows;
    for (auto [s, t] : arcs)
        arrows.push_back({"[" + std::to_string(s) + "," + std::to_string(t) + "]",
                          std::to_string(s), std::to_string(t)});
    const int rels[24][8] = {
        {1, 2, 2, 3, 1, 4, 4, 3}, {1, 2, 2, 6, 1, 5, 5, 6}, {1, 4, 4, 8, 1, 5, 5, 8},
        {2, 1, 1, 5, 2, 6, 6, 5}, {2, 1, 1, 4, 2, 3, 3, 4}, {2, 3, 3, 7, 2, 6, 6, 7},
        {3, 2, 2, 1, 3, 4, 4, 1}, {3, 2, 2, 6, 3, 7, 7, 6}, {3, 4, 4, 8, 3, 7, 7, 8},
        {4, 1, 1, 2, 4, 3, 3, 2}, {4, 1, 1, 5, 4, 8, 8, 5}, {4, 3, 3, 7, 4, 8, 8, 7},
        {5, 1, 1, 2, 5, 6, 6, 2}, {5, 1, 1, 4, 5, 8, 8, 4}, {5, 6, 6, 7, 5, 8, 8, 7},
        {6, 2, 2, 1, 6, 5, 5, 1}, {6, 2, 2, 3, 6, 7, 7, 3}, {6, 5, 5, 8, 6, 7, 7, 8},
        {7, 3, 3, 2, 7, 6, 6, 2}, {7, 3, 3, 4, 7, 8, 8, 4}, {7, 6, 6, 5, 7, 8, 8, 5},
        {8, 4, 4, 1, 8, 5, 5, 1}, {8, 4, 4, 3, 8, 7, 7, 3}, {8, 5, 5, 6, 8, 7, 7, 6}};
    std::vector<std::array<std::string, 4>> relations;
    auto arc = [](int s, int t) {
        return "[" + std::to_string(s) + "," + std::to_string(t) + "]";
    };
    for (auto& r : rels)
        relations.push_back({arc(r[0], r[1]), arc(r[2], r[3]), arc(r[4], r[5]),
                             arc(r[6], r[7])});
    return wrap(Presentation::build(Quiver::build(vertices, std::move(arrows)), relations));
}

}  // namespace

Document builtin_example(std::string_view name, std::optional<int> param) {
    if (name == "z3")
        return heap_solution(cyclic_group(3));
    if (name == "zk") {
        if (!param)
            throw ParseError("example zk needs --k");
        if (*param < 1 || *param > 16)
            throw ParseError("example zk supports 1 <= k <= 16");
        return heap_solution(cyclic_group(*param));
    }
    if (name == "z2n") {
        if (!param)
            throw ParseError("example z2n needs --n");
        if (*param < 1 || *param > 6)
            throw ParseError("example z2n supports 1 <= n <= 6");
        return heap_solution(bitvector_group(*param));
    }
    if (name == "pres0")
        return pres0();
    if (name == "pres1") {
        std::vector<std::string> vertices{"1", "2", "3"};
        std::vector<ArrowSpec> arrows;
        for (auto [s, t] : {std::pair{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 1}, {1, 3}})
            arrows.push_back({"[" + std::to_string(s) + "," + std::to_string(t) + "]",
                              std::to_string(s), std::to_string(t)});
        std::vector<std::array<std::string, 4>> relations{
            {"[1,2]", "[2,1]", "[1,3]", "[3,1]"},
            {"[2,3]", "[3,2]", "[2,1]", "[1,2]"},
            {"[3,1]", "[1,3]", "[3,2]", "[2,3]"}};
        return wrap(Presentation::build(Quiver::build(vertices, std::move(arrows)), relations));
    }
    if (name == "pres2") {
        std::vector<std::string> vertices{"1", "2", "3", "4"};
        std::vector<ArrowSpec> arrows;
        for (auto [s, t] :
             {std::pair{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 1}, {1, 4}})
            arrows.push_back({"[" + std::to_string(s) + "," + std::to_string(t) + "]",
                              std::to_string(s), std::to_string(t)});
        std::vector<std::array<std::string, 4>> relations{
            {"[1,2]", "[2,3]", "[1,4]", "[4,3]"},
            {"[2,3]", "[3,4]", "[2,1]", "[1,4]"},
            {"[3,4]", "[4,1]", "[3,2]", "[2,1]"},
            {"[4,1]", "[1,2]", "[4,3]", "[3,2]"}};
        return wrap(Presentation::build(Quiver::build(vertices, std::move(arrows)), relations));
    }
    throw ParseError("unknown example \"" + std::string(name) +
                     "\"; known: z3, z2n, zk, pres0, pres1, pres2");
}

}  // namespace gq

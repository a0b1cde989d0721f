#include "finspace/fixtures.hpp"

namespace finspace {

namespace {

Poset make_labeled(int n, const std::vector<std::pair<int, int>>& covers,
                   std::vector<std::string> labels) {
    Poset p = from_covers(n, covers);
    p.labels = std::move(labels);
    return p;
}

std::vector<std::string> labels334() {
    return {"c1", "c2", "c3", "b1", "b2", "b3", "a1", "a2", "a3", "a4"};
}

std::vector<std::string> labels343() {
    return {"c1", "c2", "c3", "b1", "b2", "b3", "b4", "a1", "a2", "a3"};
}

}  // namespace

Poset type_poset(TypeLabel t) {
    // Ids: layer (3,3,4) uses c1..c3 = 0..2, b1..b3 = 3..5, a1..a4 = 6..9;
    // layer (3,4,3) uses c1..c3 = 0..2, b1..b4 = 3..6, a1..a3 = 7..9.
    switch (t) {
        case TypeLabel::I:
            return make_labeled(10,
                                {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5},
                                 {3, 6}, {3, 7},
                                 {4, 6}, {4, 8}, {4, 9},
                                 {5, 6}, {5, 7}, {5, 8}, {5, 9}},
                                labels334());
        case TypeLabel::II:
            return make_labeled(10,
                                {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5},
                                 {3, 6}, {3, 7}, {3, 8},
                                 {4, 6}, {4, 7}, {4, 9},
                                 {5, 6}, {5, 8}, {5, 9}},
                                labels334());
        case TypeLabel::III:
            return make_labeled(10,
                                {{0, 3}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                 {3, 6}, {3, 7}, {3, 8},
                                 {4, 6}, {4, 7}, {4, 9},
                                 {5, 8}, {5, 9}},
                                labels334());
        case TypeLabel::IV:
            return make_labeled(10,
                                {{0, 3}, {0, 5}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                 {3, 7}, {3, 8}, {4, 7}, {4, 8},
                                 {5, 7}, {5, 9}, {6, 7}, {6, 9}},
                                labels343());
        case TypeLabel::V:
            return make_labeled(10,
                                {{0, 3}, {0, 5}, {1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                                 {3, 7}, {3, 8}, {4, 7}, {4, 8},
                                 {5, 7}, {5, 9}, {6, 7}, {6, 9}},
                                labels343());
        case TypeLabel::VI:
            return make_labeled(10,
                                {{0, 3}, {0, 5}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                 {3, 7}, {3, 8}, {4, 7}, {4, 8},
                                 {5, 7}, {5, 9}, {6, 8}, {6, 9}},
                                labels343());
        case TypeLabel::VII:
            return make_labeled(10,
                                {{0, 3}, {0, 5}, {1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                                 {3, 7}, {3, 8}, {4, 7}, {4, 8},
                                 {5, 7}, {5, 9}, {6, 8}, {6, 9}},
                                labels343());
        case TypeLabel::Iop:
            return dual(type_poset(TypeLabel::I));
        case TypeLabel::IIop:
            return dual(type_poset(TypeLabel::II));
        case TypeLabel::IIIop:
            return dual(type_poset(TypeLabel::III));
        case TypeLabel::Unmatched:
            break;
    }
    throw Error("no fixture for this label");
}

std::vector<Fixture> builtin_fixtures() {
    std::vector<Fixture> out;
    for (TypeLabel t : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV, TypeLabel::V,
                        TypeLabel::VI, TypeLabel::VII, TypeLabel::Iop, TypeLabel::IIop,
                        TypeLabel::IIIop}) {
        out.push_back({t, type_poset(t)});
    }
    return out;
}

std::vector<CollapseStep> builtin_certificate(TypeLabel t) {
    switch (t) {
        case TypeLabel::I:
            return {
                {{0, 3, 7}, {0, 7}}, {{0, 3, 6}, {0, 3}}, {{1, 3, 7}, {3, 7}}, {{1, 3, 6}, {1, 3}},
                {{0, 4, 9}, {0, 9}}, {{0, 4, 8}, {0, 8}}, {{0, 4, 6}, {0, 4}}, {{2, 4, 9}, {4, 9}},
                {{2, 4, 8}, {4, 8}}, {{2, 4, 6}, {2, 4}}, {{1, 5, 9}, {1, 9}}, {{1, 5, 8}, {1, 8}},
                {{1, 5, 7}, {1, 7}}, {{1, 5, 6}, {1, 5}}, {{2, 5, 9}, {2, 9}}, {{2, 5, 8}, {2, 8}},
                {{2, 5, 7}, {2, 7}}, {{2, 5, 6}, {2, 5}},
            };
        case TypeLabel::II:
            return {
                {{0, 3, 8}, {0, 8}}, {{0, 4, 9}, {0, 9}}, {{1, 5, 9}, {1, 9}}, {{2, 5, 8}, {2, 8}},
                {{2, 4, 7}, {2, 7}}, {{1, 3, 7}, {1, 7}}, {{0, 3, 7}, {3, 7}}, {{0, 4, 7}, {0, 7}},
                {{1, 3, 8}, {3, 8}}, {{1, 5, 8}, {1, 8}}, {{2, 5, 9}, {5, 9}}, {{2, 4, 9}, {4, 9}},
                {{0, 3, 6}, {0, 3}}, {{1, 3, 6}, {1, 3}}, {{0, 4, 6}, {0, 4}}, {{1, 5, 6}, {1, 5}},
                {{2, 4, 6}, {2, 4}}, {{2, 5, 6}, {2, 5}},
            };
        case TypeLabel::III:
            return {
                {{0, 3, 7}, {0, 7}}, {{2, 3, 7}, {3, 7}}, {{2, 4, 7}, {2, 7}}, {{1, 4, 7}, {4, 7}},
                {{0, 5, 9}, {0, 9}}, {{0, 5, 8}, {0, 5}}, {{0, 3, 6}, {0, 6}}, {{2, 3, 6}, {3, 6}},
                {{2, 4, 6}, {2, 6}}, {{1, 4, 6}, {4, 6}}, {{1, 4, 9}, {1, 4}}, {{2, 4, 9}, {4, 9}},
                {{2, 5, 9}, {2, 9}}, {{1, 5, 9}, {5, 9}}, {{0, 3, 8}, {0, 3}}, {{2, 3, 8}, {2, 3}},
                {{1, 5, 8}, {1, 5}}, {{2, 5, 8}, {2, 5}},
            };
        case TypeLabel::IV:
            return {
                {{0, 3, 8}, {0, 8}}, {{0, 5, 9}, {0, 9}}, {{1, 4, 8}, {1, 8}}, {{1, 6, 9}, {1, 9}},
                {{2, 6, 9}, {6, 9}}, {{2, 5, 9}, {5, 9}}, {{2, 3, 8}, {3, 8}}, {{2, 4, 8}, {4, 8}},
                {{0, 3, 7}, {0, 3}}, {{2, 3, 7}, {3, 7}}, {{1, 4, 7}, {1, 4}}, {{2, 4, 7}, {4, 7}},
                {{0, 5, 7}, {0, 5}}, {{2, 5, 7}, {5, 7}}, {{1, 6, 7}, {1, 6}}, {{2, 6, 7}, {6, 7}},
            };
        case TypeLabel::V:
            return {
                {{0, 5, 9}, {0, 9}}, {{0, 5, 7}, {0, 5}}, {{0, 3, 8}, {0, 8}}, {{0, 3, 7}, {0, 3}},
                {{1, 3, 7}, {3, 7}}, {{1, 3, 8}, {3, 8}}, {{1, 4, 8}, {1, 8}}, {{2, 4, 8}, {4, 8}},
                {{2, 4, 7}, {2, 4}}, {{1, 4, 7}, {4, 7}}, {{2, 5, 9}, {5, 9}}, {{2, 6, 9}, {2, 9}},
                {{1, 6, 9}, {6, 9}}, {{1, 6, 7}, {1, 6}}, {{2, 6, 7}, {6, 7}}, {{2, 5, 7}, {2, 7}},
            };
        case TypeLabel::VI:
            return {
                {{0, 3, 8}, {0, 8}}, {{0, 5, 9}, {0, 9}}, {{1, 4, 7}, {1, 7}}, {{1, 6, 9}, {1, 9}},
                {{2, 3, 8}, {3, 8}}, {{2, 5, 9}, {5, 9}}, {{2, 4, 7}, {4, 7}}, {{2, 6, 9}, {6, 9}},
                {{2, 3, 7}, {2, 3}}, {{2, 5, 7}, {2, 5}}, {{2, 4, 8}, {2, 4}}, {{2, 6, 8}, {2, 6}},
                {{0, 3, 7}, {3, 7}}, {{0, 5, 7}, {5, 7}}, {{1, 4, 8}, {4, 8}}, {{1, 6, 8}, {6, 8}},
            };
        case TypeLabel::VII:
            return {
                {{0, 3, 8}, {0, 8}}, {{0, 5, 9}, {0, 9}}, {{1, 6, 9}, {1, 9}}, {{1, 3, 8}, {3, 8}},
                {{2, 5, 9}, {5, 9}}, {{2, 6, 9}, {6, 9}}, {{0, 3, 7}, {0, 3}}, {{0, 5, 7}, {0, 5}},
                {{1, 6, 8}, {1, 6}}, {{1, 4, 8}, {1, 8}}, {{2, 5, 7}, {2, 5}}, {{2, 6, 8}, {2, 6}},
                {{2, 4, 8}, {4, 8}}, {{2, 4, 7}, {2, 4}}, {{1, 4, 7}, {4, 7}}, {{1, 3, 7}, {3, 7}},
            };
        default:
            break;
    }
    throw Error("no built-in certificate for this label");
}

Poset witness_cycle_poset() {
    // Middle squares b1, b2 over {c1, c2} and under {a1, a2}; b3 joins
    // (c1, c3) to (a1, a3); b4 joins (c2, c3) to (a2, a3).
    return make_labeled(10,
                        {{0, 3}, {1, 3}, {0, 4}, {1, 4}, {0, 5}, {2, 5}, {1, 6}, {2, 6},
                         {3, 7}, {3, 8}, {4, 7}, {4, 8},
                         {5, 7}, {5, 9}, {6, 8}, {6, 9}},
                        labels343());
}

Chain witness_cycle() {
    // [c1,b3] - [c3,b3] + [c3,b4] - [c2,b4] + [c2,b1] - [c1,b1]
    return {
        {{0, 5}, 1}, {{2, 5}, -1}, {{2, 6}, 1}, {{1, 6}, -1}, {{1, 3}, 1}, {{0, 3}, -1},
    };
}

Poset witness_h3_poset() {
    // b1, b2 between {c1, c2} and {b3, b4}; b3, b4 under {a1, a2};
    // b1, b2 also under a3; c3 under b3, b4 only.  Height 3, and the
    // product 3-cycle (c1-c2)(b1-b2)(b3-b4)(a1-a2) cannot bound.
    return make_labeled(10,
                        {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}, {2, 6},
                         {3, 5}, {3, 6}, {4, 5}, {4, 6},
                         {5, 7}, {5, 8}, {6, 7}, {6, 8},
                         {3, 9}, {4, 9}},
                        labels343());
}

}  // namespace finspace

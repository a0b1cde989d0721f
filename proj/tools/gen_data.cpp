/**
 * Regenerates data/ from the built-in fixtures and certificates so the
 * on-disk copies never drift from the library.  Usage: gen_data <dir>,
 * writing <dir>/posets/*.poset and <dir>/certificates/*.collapse.
 */
#include <filesystem>
#include <fstream>
#include <iostream>

#include "finspace/collapse.hpp"
#include "finspace/fixtures.hpp"
#include "finspace/io.hpp"

using namespace finspace;

namespace {

std::string file_stem(TypeLabel t) {
    switch (t) {
        case TypeLabel::I: return "type_I";
        case TypeLabel::II: return "type_II";
        case TypeLabel::III: return "type_III";
        case TypeLabel::IV: return "type_IV";
        case TypeLabel::V: return "type_V";
        case TypeLabel::VI: return "type_VI";
        case TypeLabel::VII: return "type_VII";
        case TypeLabel::Iop: return "type_Iop";
        case TypeLabel::IIop: return "type_IIop";
        case TypeLabel::IIIop: return "type_IIIop";
        default: return "unmatched";
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string());
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_data <data-dir>\n";
        return 2;
    }
    std::filesystem::path root(argv[1]);
    std::filesystem::create_directories(root / "posets");
    std::filesystem::create_directories(root / "certificates");
    try {
        for (const Fixture& f : builtin_fixtures()) {
            write_text(root / "posets" / (file_stem(f.label) + ".poset"),
                       poset_to_string(f.poset));
        }
        for (TypeLabel t : {TypeLabel::I, TypeLabel::II, TypeLabel::III, TypeLabel::IV,
                            TypeLabel::V, TypeLabel::VI, TypeLabel::VII}) {
            write_text(root / "certificates" / (file_stem(t) + ".collapse"),
                       format_certificate(builtin_certificate(t)));
        }
        Poset point;
        point.n = 1;
        write_text(root / "posets" / "point.poset", poset_to_string(point));
        write_text(root / "posets" / "witness_cycle.poset", poset_to_string(witness_cycle_poset()));
        write_text(root / "posets" / "witness_h3.poset", poset_to_string(witness_h3_poset()));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

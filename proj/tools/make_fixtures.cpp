// Regenerates the scheme fixtures shipped in schemes/. Usage: make_fixtures <dir>
#include <fstream>
#include <iostream>

#include "weylkit/catalog.hpp"
#include "weylkit/json_io.hpp"

using namespace weylkit;

static void emit(const std::string& dir, const std::string& name, const CartanScheme& s) {
    std::ofstream out(dir + "/" + name + ".json", std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << dir << "/" << name << ".json\n";
        std::exit(1);
    }
    out << scheme_to_json(s);
    std::cout << name << ".json\n";
}

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "schemes";
    const std::vector<int> swap_xy{1, 0, 2}, swap_yz{0, 2, 1}, ident3{0, 1, 2};

    Mat a2 = detail::mat2(2, -1, -1, 2);
    emit(dir, "a2", standard_scheme(a2, {"x"}, {{0}, {0}}));
    emit(dir, "a1a1", standard_scheme(detail::mat2(2, 0, 0, 2), {"x"}, {{0}, {0}}));

    const Int quads[7][4] = {{1, 1, 1, 1}, {1, 1, 3, 3}, {1, 2, 4, 2}, {1, 3, 6, 2},
                             {1, 4, 5, 2}, {1, 3, 7, 2}, {1, 5, 5, 2}};
    for (int k = 0; k < 7; ++k)
        emit(dir, "r2o3_" + std::to_string(k + 1),
             three_object_rank2(quads[k][0], quads[k][1], quads[k][2], quads[k][3]));

    emit(dir, "o2r2_a", two_object_rank2_exceptional(-4));
    emit(dir, "o2r2_b", two_object_rank2_exceptional(-5));
    emit(dir, "o2r3_a", two_object_rank3_exceptional(0));
    emit(dir, "o2r3_b", two_object_rank3_exceptional(1));

    Mat a3 = detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    Mat b3 = detail::mat_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    Mat c3 = detail::mat_rows({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    emit(dir, "a3_3obj", standard_scheme(a3, {"x", "y", "z"}, {swap_xy, swap_yz, swap_xy}));
    emit(dir, "b3_3obj", standard_scheme(b3, {"x", "y", "z"}, {swap_xy, swap_yz, ident3}));
    emit(dir, "c3_3obj", standard_scheme(c3, {"x", "y", "z"}, {swap_xy, swap_yz, ident3}));

    emit(dir, "b4_3obj", standard_scheme(cartan_matrix_B4(), {"x", "y", "z"},
                                         {swap_xy, swap_yz, swap_xy, ident3}));
    emit(dir, "c4_3obj", standard_scheme(cartan_matrix_C4(), {"x", "y", "z"},
                                         {swap_xy, swap_yz, swap_xy, ident3}));
    emit(dir, "d4_3obj", standard_scheme(cartan_matrix_D4(), {"x", "y", "z"},
                                         {swap_xy, swap_yz, swap_xy, swap_xy}));
    emit(dir, "f4_3obj", standard_scheme(cartan_matrix_F4(), {"x", "y", "z"},
                                         {swap_xy, swap_yz, ident3, ident3}));

    Mat aff = detail::mat_rows(
        {{2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}});
    emit(dir, "rank4_infinite", standard_scheme(aff, {"x"}, {{0}, {0}, {0}, {0}}));

    emit(dir, "coset_a3", coset_scheme(3, {{1, 0, 3, 2}}));
    return 0;
}

#include "boxdist/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxdist {

ConstructionReport characteristic_vector_set(std::size_t n, std::size_t s) {
    if (s == 0 || s > n)
        throw std::invalid_argument("characteristic_vector_set: need 0 < s <= n");

    Box box = Box::integer_grid(n, 2);
    std::vector<Point> pts;
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    for (;;) {
        std::vector<Scalar> coords(n, Scalar(0));
        for (std::size_t i : comb) coords[i] = Scalar(1);
        pts.emplace_back(std::move(coords));
        std::size_t i = s;
        bool advanced = false;
        while (i-- > 0) {
            if (comb[i] + (s - i) < n) {
                ++comb[i];
                for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(pts.begin(), pts.end());

    BigInt claimed;
    mpz_bin_uiui(claimed.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(s));

    PointSet set(std::move(box), std::move(pts));
    SquaredDistancePalette pal =
        set.size() > 1 ? distance_palette(set) : SquaredDistancePalette();
    const std::size_t achieved = pal.size();
    return ConstructionReport{std::move(set), std::move(claimed), std::move(pal), achieved};
}

ConstructionReport full_box_report(const Box& box) {
    std::vector<Point> pts = box.all_points();
    PointSet set(box, std::move(pts));
    SquaredDistancePalette pal = distance_palette(set);
    const std::size_t achieved = pal.size();
    BigInt claimed = box.point_count();
    return ConstructionReport{std::move(set), std::move(claimed), std::move(pal), achieved};
}

}  // namespace boxdist

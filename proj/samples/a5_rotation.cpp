// Thick subcategories of the orbit category of type (A_5, 4, 1), drawn both ways.
#include <iostream>

#include <thicket/thicket.hpp>

int main() {
    using namespace thicket;
    const CategoryType ct = CategoryType::make(Series::A, 5, 4, 1);
    const Context& ctx = context(ct.delta);
    const auto thick = enumerate_thick(ct);
    std::cout << ct.str() << ": " << thick.size() << " thick subcategories\n";
    for (const auto& d : thick) {
        std::cout << "\n" << brady_f(ctx.rs, d.nc_element).str() << "\n";
        std::cout << render_ar_strip_ascii(ctx, d.roots, {0, 10, ct.r});
    }
}

#include "qparity/genfun.hpp"

#include <stdexcept>
#include <string>

namespace qparity {

namespace {

void require_odd(std::size_t t, std::size_t min, const char* what)
{
    if (t < min || t % 2 == 0)
        throw std::invalid_argument(std::string(what) + " needs odd t >= " + std::to_string(min) +
                                    ", got t=" + std::to_string(t));
}

}  // namespace

TruncatedSeries ptt_series(std::size_t t, std::size_t order)
{
    if (t == 0)
        throw std::invalid_argument("ptt_series needs t >= 1");
    auto partitions = series_recip(euler_product(1, 1, order));
    return series_mul(partitions, alternating_triangular(t, order));
}

TruncatedSeries ptt_mod2_series(std::size_t t, std::size_t order)
{
    require_odd(t, 1, "ptt_mod2_series");
    auto numerator = euler_product(t, 3, order, Domain::Mod2);
    auto partitions = series_recip(euler_product(1, 1, order, Domain::Mod2));
    return series_mul(numerator, partitions);
}

TruncatedSeries acore_series(std::size_t t, std::size_t order, Domain domain)
{
    if (t < 2)
        throw std::invalid_argument("acore_series needs t >= 2");
    auto numerator = euler_product(t, static_cast<int>(t), order, domain);
    return series_mul(numerator, series_recip(euler_product(1, 1, order, domain)));
}

bool dissection_identity_check(std::size_t t, std::size_t residue, std::size_t order)
{
    require_odd(t, 3, "dissection_identity_check");
    const std::size_t modulus = 2 * t;
    if (residue >= modulus)
        throw std::invalid_argument("residue must be below 2t");
    const std::size_t source_order = modulus * order;

    auto lhs = dissect(ptt_mod2_series(t, source_order), modulus, residue).truncate(order);

    auto prefactor =
        series_recip(euler_product(1, static_cast<int>((t - 3) / 2), order, Domain::Mod2));
    auto cores = dissect(acore_series(t, source_order, Domain::Mod2), modulus, residue);
    auto rhs = series_mul(prefactor, cores.truncate(order));
    return lhs == rhs;
}

}  // namespace qparity

// Times the OpenMP scan kernels against their serial reference
// implementations on the pairs that dominate the verification workload.

#include <chrono>
#include <cstdio>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hgp/gelfand.hpp"
#include "hgp/hyperoctahedral.hpp"
#include "hgp/kernels.hpp"

using namespace hgp;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

GroupTable symmetric_group(int m) {
    std::vector<Permutation> elems;
    std::vector<int> im(m);
    std::iota(im.begin(), im.end(), 1);
    do elems.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    return GroupTable::from_elements(std::move(elems));
}

void report(const char* kernel, const char* pair, double serial_ms, double parallel_ms) {
    std::printf("%-28s %-12s serial %9.1f ms   omp %9.1f ms   speedup %.2fx\n", kernel, pair,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}   // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the same serial code\n");
#endif

    {
        GroupTable g = enumerate_h(5);
        IndexSet k = embedded_h_indices(g, enumerate_h(4));
        std::vector<uint32_t> a, b;
        double s = time_ms([&] { a = kernels::k_conjugation_keys_serial(g, k); });
        double p = time_ms([&] { b = kernels::k_conjugation_keys(g, k); });
        report("k_conjugation_keys", "(H5,H4)", s, p);
        if (a != b) std::printf("MISMATCH in k_conjugation_keys\n");

        s = time_ms([&] { a = kernels::double_coset_keys_serial(g, k); });
        p = time_ms([&] { b = kernels::double_coset_keys(g, k); });
        report("double_coset_keys", "(H5,H4)", s, p);
        if (a != b) std::printf("MISMATCH in double_coset_keys\n");

        std::vector<int32_t> c, d;
        s = time_ms([&] { c = kernels::inverse_conjugator_scan_serial(g, k); });
        p = time_ms([&] { d = kernels::inverse_conjugator_scan(g, k); });
        report("inverse_conjugator_scan", "(H5,H4)", s, p);
        if (c != d) std::printf("MISMATCH in inverse_conjugator_scan\n");

        auto parts = double_cosets(g, k);
        kernels::CommutativityResult r1, r2;
        s = time_ms([&] { r1 = kernels::convolution_commutativity_serial(g, parts); });
        p = time_ms([&] { r2 = kernels::convolution_commutativity(g, parts); });
        report("convolution_commutativity", "(H5,H4)", s, p);
        if (r1.commutative != r2.commutative || r1.witness != r2.witness)
            std::printf("MISMATCH in convolution_commutativity\n");
    }
    {
        GroupTable g = symmetric_group(8);
        IndexSet k;
        for (uint32_t i = 0; i < g.order(); ++i)
            if (is_member_h(g.element(i))) k.push_back(i);

        std::vector<int32_t> c, d;
        double s = time_ms([&] { c = kernels::inverse_conjugator_scan_serial(g, k); });
        double p = time_ms([&] { d = kernels::inverse_conjugator_scan(g, k); });
        report("inverse_conjugator_scan", "(S8,H4)", s, p);
        if (c != d) std::printf("MISMATCH in inverse_conjugator_scan\n");

        std::vector<uint32_t> a, b;
        s = time_ms([&] { a = kernels::double_coset_keys_serial(g, k); });
        p = time_ms([&] { b = kernels::double_coset_keys(g, k); });
        report("double_coset_keys", "(S8,H4)", s, p);
        if (a != b) std::printf("MISMATCH in double_coset_keys\n");
    }
    return 0;
}

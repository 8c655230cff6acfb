/*
   Copyright 2026 The pirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Glues a negacyclic and a cyclic code over F3 into a (1 - 2v)-constacyclic
// code over F3 + vF3 and recovers its single generator.

#include <iostream>

#include <pirc/pirc.hpp>

int main()
{
    auto F3 = pirc::finite_field(3);
    auto R = pirc::PIRing::rvr(F3);
    const std::size_t n = 4;
    const pirc::Elt minus_one = F3->from_int(-1);

    auto neg = pirc::all_specs(pirc::factor_xn_minus_lambda(F3, n, minus_one));
    auto cyc = pirc::all_specs(pirc::factor_xn_minus_lambda(F3, n, F3->one()));
    pirc::ProductCode pc = pirc::chinese_product_code(R, {pirc::build_code(neg[1]), pirc::build_code(cyc[2])});

    std::cout << "ring: " << R->name() << ", lambda = " << R->to_string(pc.lambda()) << '\n';
    std::cout << "|C| = " << pc.cardinality() << '\n';
    auto g = pirc::rvr_generators(pc);
    std::cout << "f1 = " << g.f1.to_string() << ", f2 = " << g.f2.to_string() << '\n';
    std::cout << "v f1 + (1 - v) f2 coefficients:";
    for (pirc::Elt a : g.f)
        std::cout << ' ' << R->to_string(a);
    std::cout << '\n';
}

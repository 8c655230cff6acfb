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

// Factors x^7 - 1 over Z/4, asks whether nontrivial cyclic self-dual codes
// exist, builds one and prints it as a descriptor.

#include <iostream>

#include <pirc/descriptor.hpp>
#include <pirc/pirc.hpp>

int main()
{
    auto Z4 = pirc::z_pe(2, 2);
    const std::size_t n = 7;

    auto F = pirc::factor_xn_minus_lambda(Z4, n, Z4->one());
    for (const auto& f : F.factors)
        std::cout << "factor: " << f.to_string() << '\n';

    auto verdict = pirc::self_dual_verdict(*Z4, n);
    std::cout << "verdict: " << pirc::status_name(verdict.status) << " (" << verdict.decided_by << ")\n";

    pirc::Code c = pirc::construct_self_dual(Z4, n);
    std::cout << "self-dual: " << std::boolalpha << pirc::is_self_dual(c) << ", |C| = " << c.cardinality() << '\n';
    std::cout << pirc::code_json(c).dump(2) << '\n';
}

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

#ifndef PIRC_ERROR_HPP
#define PIRC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pirc {

enum class errc {
    non_prime_p,
    reducible_modulus,
    ring_too_large,
    non_monic_divisor,
    zero_polynomial,
    not_coprime_length,
    not_a_unit,
    not_a_divisor,
    not_coprime,
    not_odd_prime,
    unsupported_lambda,
    delta_power_mismatch,
    no_such_code,
    length_mismatch,
    arity_mismatch,
    non_principal_component,
    grid_too_large,
    too_large_for_oracle,
    malformed_descriptor,
    malformed_input,
    invalid_argument,
    invariant_breach,
};

constexpr std::string_view errc_name(errc c) noexcept
{
    switch (c) {
    case errc::non_prime_p: return "NonPrimeP";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::ring_too_large: return "RingTooLarge";
    case errc::non_monic_divisor: return "NonMonicDivisor";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_coprime_length: return "NotCoprimeLength";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_odd_prime: return "NotOddPrime";
    case errc::unsupported_lambda: return "UnsupportedLambda";
    case errc::delta_power_mismatch: return "DeltaPowerMismatch";
    case errc::no_such_code: return "NoSuchCode";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::non_principal_component: return "NonPrincipalComponent";
    case errc::grid_too_large: return "GridTooLarge";
    case errc::too_large_for_oracle: return "TooLargeForOracle";
    case errc::malformed_descriptor: return "MalformedDescriptor";
    case errc::malformed_input: return "MalformedInput";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::invariant_breach: return "InvariantBreach";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void ensure(bool cond, errc code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

}  // namespace pirc

#endif

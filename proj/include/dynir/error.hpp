/*
   Copyright 2026 The dynir Authors

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

#ifndef DYNIR_ERROR_HPP
#define DYNIR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynir {

enum class Errc {
    InvalidArgument,
    CompositeCharacteristic,
    DegreeZero,
    DivisionByZero,
    FieldMismatch,
    ExponentSharesCharacteristic,
    EvenCharacteristic,
    CharacteristicThree,
    ReducibleModulus,
    ZeroPolynomial,
    ZeroScale,
    VanishingDerivative,
    ConstantPolynomial,
    ReducibleG,
    CharacteristicDividesDegree,
    HypothesisFailure,
    NotCentered,
    PreviousIterateReducible,
    CharacteristicLEQ3,
    BothCoefficientsZero,
    InseparableDerivative,
    SquareRootMissing,
    TowerBuildFailure,
    ConstantDerivative,
    ExcludedG,
    MalformedShape,
    ReducibleInput,
    NoWitnessA,
    UnknownFamily,
    ParseError,
    FieldTooLarge,
    OracleMismatch,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ExponentSharesCharacteristic: return "ExponentSharesCharacteristic";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::CharacteristicThree: return "CharacteristicThree";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroScale: return "ZeroScale";
        case Errc::VanishingDerivative: return "VanishingDerivative";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::ReducibleG: return "ReducibleG";
        case Errc::CharacteristicDividesDegree: return "CharacteristicDividesDegree";
        case Errc::HypothesisFailure: return "HypothesisFailure";
        case Errc::NotCentered: return "NotCentered";
        case Errc::PreviousIterateReducible: return "PreviousIterateReducible";
        case Errc::CharacteristicLEQ3: return "CharacteristicLEQ3";
        case Errc::BothCoefficientsZero: return "BothCoefficientsZero";
        case Errc::InseparableDerivative: return "InseparableDerivative";
        case Errc::SquareRootMissing: return "SquareRootMissing";
        case Errc::TowerBuildFailure: return "TowerBuildFailure";
        case Errc::ConstantDerivative: return "ConstantDerivative";
        case Errc::ExcludedG: return "ExcludedG";
        case Errc::MalformedShape: return "MalformedShape";
        case Errc::ReducibleInput: return "ReducibleInput";
        case Errc::NoWitnessA: return "NoWitnessA";
        case Errc::UnknownFamily: return "UnknownFamily";
        case Errc::ParseError: return "ParseError";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::OracleMismatch: return "OracleMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dynir

#endif

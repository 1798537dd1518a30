#pragma once

namespace composites::cite {

// Citation anchor strings attached to asserted verdicts and claim records.
// These are the exact statements of the claims under test; reports quote
// them verbatim so a verdict can be traced to the criterion it came from.
inline constexpr const char* P1a = "atomic if and only if $T$ is atomic and $D$ is a field";
inline constexpr const char* P1b = "$R$ satisfies ACCP if and only if $T$ satisfies ACCP and $D$ is a field";
inline constexpr const char* P2 =
    "If $A+XB[X]$ is a noetherian domain, where $A\\subset B$ are domains, then $A+XB[X]$ is a BFD";
inline constexpr const char* P3 = "$R$ is a BFD if and only if $T$ is a BFD and $D$ is a field";
inline constexpr const char* P4 = "$R$ is a HFD if and only if $D$ is a field and $T$ is a HFD";
inline constexpr const char* P5 = "the multiplicative group $K^{\\ast}/M^{\\ast}$ is finite";
inline constexpr const char* P6 =
    "$R$ is an idf-domain if and only if $D$ has only a finite number of nonassociate irreducible elements";
inline constexpr const char* P7 = "$T$ is a FFD, $D$ is a field, and $K^{\\ast}/D^{\\ast}$ is finite";
inline constexpr const char* P8 = "$D+XD_S[X]$ is an S-domain";
inline constexpr const char* T9 =
    "$R=D+XD_S[X]$ is a Hilbert domain if and only if $D$ and $D_S$ are Hilbert domains";
inline constexpr const char* P10 = "$R=A+XK[X]$ is a HFD if and only if $A$ is a field";
inline constexpr const char* P11 = "one-dimensional almost B\\'ezout domain";
inline constexpr const char* P12a = "the composite cover of $I(K,R)$ is $R+XK[X]$";
inline constexpr const char* P12b = "the composite cover of $I(B,A)$ is $A+XB[X]$";
inline constexpr const char* P13 = "$B$ is integrally closed and $A$ is integrally closed in $B$";
inline constexpr const char* T_DEDEKIND = "Then $K+XL[X]$ be a Dedekind domain";
inline constexpr const char* P14a = "$P'=\\{x\\in T_0; xP\\subset T\\}$";
inline constexpr const char* P14b = "unambiguous representation in the form product of prime ideals";
inline constexpr const char* P14c = "Every nonzero ideal of $T$ is invertible";
inline constexpr const char* P14d = "$T/I$ is a principal ideal domain";
inline constexpr const char* P01 = "if and only if $[L\\colon K]<\\infty$";
inline constexpr const char* P02 = "be an algebraic extension";
inline constexpr const char* P04 = "be a separable extension";
inline constexpr const char* P06 = "be a normal extension";
inline constexpr const char* P07 = "such that $L^{G(L\\mid K)}=K$";
inline constexpr const char* P09 = "$|G(L\\mid K)|=[L\\colon K]$";
inline constexpr const char* P10G = "be a Galois extension";
inline constexpr const char* SEQ_EXACT = "$0\\rightarrow A+XB[X]\\rightarrow B[X]$";
inline constexpr const char* DIAGRAM = "UFD=>FFD=>BFD=>ACCP=>atomic";
inline constexpr const char* NOETHERIAN = "$K+XL[X]$ is noetherian domain";
inline constexpr const char* NON_NOETHERIAN =
    "two-dimensional, non-Noetherian, B\\'ezout-Hilbert domain";
inline constexpr const char* NO_XB_IRREDUCIBLE = "no element of $XL[X]$ is irreducible";

}  // namespace composites::cite

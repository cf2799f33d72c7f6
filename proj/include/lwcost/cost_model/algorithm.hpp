#pragma once
#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lwcost {

// One entry per row of the finalist complexity table.
enum class Family
{
  Ascon,
  Elephant,
  GiftCofb,
  Grain128Aead,
  Isap,
  PhotonBeetle,
  RomulusN,
  Sparkle,
  TinyJambu,
  Xoodyak,
};

enum class Variant
{
  Ascon128,
  Ascon128a,
  Dumbo,
  Jumbo,
  Delirium,
  GiftCofb,
  Grain128AeadV2,
  IsapA128a,
  IsapA128,
  PhotonBeetleAead128,
  RomulusN,
  Schwaemm256_128,
  TinyJambu128,
  Xoodyak,
};

struct AlgorithmId
{
  Family family;
  Variant variant;

  friend bool operator==(const AlgorithmId&, const AlgorithmId&) = default;
};

struct UnknownAlgorithm : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct FamilyInfo
{
  Family family;
  const char* display;
  const char* key;
  Variant primary;
};

struct VariantInfo
{
  Variant variant;
  Family family;
  const char* display;
  const char* key;
};

inline constexpr std::array<FamilyInfo, 10> families{ {
  { Family::Ascon, "ASCON", "ascon", Variant::Ascon128 },
  { Family::Elephant, "Elephant", "elephant", Variant::Dumbo },
  { Family::GiftCofb, "GIFT-COFB", "gift-cofb", Variant::GiftCofb },
  { Family::Grain128Aead, "Grain-128AEAD", "grain-128aead", Variant::Grain128AeadV2 },
  { Family::Isap, "ISAP", "isap", Variant::IsapA128a },
  { Family::PhotonBeetle, "PHOTON-Beetle", "photon-beetle", Variant::PhotonBeetleAead128 },
  { Family::RomulusN, "Romulus-N", "romulus-n", Variant::RomulusN },
  { Family::Sparkle, "SPARKLE", "sparkle", Variant::Schwaemm256_128 },
  { Family::TinyJambu, "TinyJambu", "tinyjambu", Variant::TinyJambu128 },
  { Family::Xoodyak, "Xoodyak", "xoodyak", Variant::Xoodyak },
} };

inline constexpr std::array<VariantInfo, 14> variants{ {
  { Variant::Ascon128, Family::Ascon, "Ascon-128", "ascon-128" },
  { Variant::Ascon128a, Family::Ascon, "Ascon-128a", "ascon-128a" },
  { Variant::Dumbo, Family::Elephant, "Dumbo", "elephant-dumbo" },
  { Variant::Jumbo, Family::Elephant, "Jumbo", "elephant-jumbo" },
  { Variant::Delirium, Family::Elephant, "Delirium", "elephant-delirium" },
  { Variant::GiftCofb, Family::GiftCofb, "GIFT-COFB", "gift-cofb" },
  { Variant::Grain128AeadV2, Family::Grain128Aead, "Grain-128AEADv2", "grain-128aeadv2" },
  { Variant::IsapA128a, Family::Isap, "ISAP-A-128a", "isap-a-128a" },
  { Variant::IsapA128, Family::Isap, "ISAP-A-128", "isap-a-128" },
  { Variant::PhotonBeetleAead128, Family::PhotonBeetle, "PHOTON-Beetle-AEAD[128]", "photon-beetle-aead128" },
  { Variant::RomulusN, Family::RomulusN, "Romulus-N", "romulus-n" },
  { Variant::Schwaemm256_128, Family::Sparkle, "Schwaemm256-128", "schwaemm256-128" },
  { Variant::TinyJambu128, Family::TinyJambu, "TinyJAMBU-128", "tinyjambu-128" },
  { Variant::Xoodyak, Family::Xoodyak, "Xoodyak", "xoodyak" },
} };

inline const FamilyInfo&
info(Family f)
{
  for (const auto& i : families)
    if (i.family == f)
      return i;
  throw UnknownAlgorithm("unknown algorithm family");
}

inline const VariantInfo&
info(Variant v)
{
  for (const auto& i : variants)
    if (i.variant == v)
      return i;
  throw UnknownAlgorithm("unknown algorithm variant");
}

inline std::string
lower(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return char(std::tolower(c));
  });
  return out;
}

}

inline AlgorithmId
primary(Family f)
{
  return { f, detail::info(f).primary };
}

inline std::vector<AlgorithmId>
primary_algorithms()
{
  std::vector<AlgorithmId> out;
  for (const auto& f : detail::families)
    out.push_back({ f.family, f.primary });
  return out;
}

inline std::vector<AlgorithmId>
all_variants()
{
  std::vector<AlgorithmId> out;
  for (const auto& v : detail::variants)
    out.push_back({ v.family, v.variant });
  return out;
}

inline std::string
family_name(Family f)
{
  return detail::info(f).display;
}

inline std::string
family_key(Family f)
{
  return detail::info(f).key;
}

inline std::string
variant_name(Variant v)
{
  return detail::info(v).display;
}

inline std::string
variant_key(Variant v)
{
  return detail::info(v).key;
}

// True when the family offers more than one selectable variant.
inline bool
has_variants(Family f)
{
  return std::count_if(detail::variants.begin(),
                       detail::variants.end(),
                       [f](const auto& v) { return v.family == f; }) > 1;
}

inline std::string
valid_algorithm_names()
{
  std::string out;
  for (const auto& f : detail::families) {
    if (!out.empty())
      out += ", ";
    out += f.key;
  }
  for (const auto& v : detail::variants) {
    if (v.key == std::string_view(detail::info(v.family).key))
      continue;
    out += ", ";
    out += v.key;
  }
  return out;
}

// Accepts family keys ("ascon") and variant keys ("ascon-128a"),
// case-insensitively.
inline AlgorithmId
parse_algorithm(std::string_view name)
{
  const std::string key = detail::lower(name);
  for (const auto& f : detail::families)
    if (key == f.key || key == detail::lower(f.display))
      return { f.family, f.primary };
  for (const auto& v : detail::variants)
    if (key == v.key || key == detail::lower(v.display))
      return { v.family, v.variant };
  throw UnknownAlgorithm("unknown algorithm '" + std::string(name) +
                         "'; valid names: " + valid_algorithm_names());
}

}

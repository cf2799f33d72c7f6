#pragma once
#include "ascon.hpp"
#include "elephant.hpp"
#include "gift_cofb.hpp"
#include "grain128aead.hpp"
#include "isap.hpp"
#include "photon_beetle.hpp"
#include "romulus_n.hpp"
#include "schwaemm.hpp"
#include "tinyjambu.hpp"
#include "xoodyak.hpp"

namespace lwcost {

inline std::unique_ptr<Aead>
make_aead(const AlgorithmId& alg)
{
  switch (alg.variant) {
    case Variant::Ascon128:
    case Variant::Ascon128a:
      return std::make_unique<AsconAead>(alg.variant);
    case Variant::Dumbo:
    case Variant::Jumbo:
    case Variant::Delirium:
      return std::make_unique<ElephantAead>(alg.variant);
    case Variant::GiftCofb:
      return std::make_unique<GiftCofbAead>();
    case Variant::Grain128AeadV2:
      return std::make_unique<Grain128AeadAead>();
    case Variant::IsapA128a:
    case Variant::IsapA128:
      return std::make_unique<IsapAead>(alg.variant);
    case Variant::PhotonBeetleAead128:
      return std::make_unique<PhotonBeetleAead>();
    case Variant::RomulusN:
      return std::make_unique<RomulusNAead>();
    case Variant::Schwaemm256_128:
      return std::make_unique<Schwaemm256_128Aead>();
    case Variant::TinyJambu128:
      return std::make_unique<TinyJambuAead>();
    case Variant::Xoodyak:
      return std::make_unique<XoodyakAead>();
  }
  throw UnknownAlgorithm("no cipher for algorithm");
}

}

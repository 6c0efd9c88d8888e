#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gadgetry/coloring.hpp"
#include "gadgetry/graph.hpp"

namespace gadgetry {

// Two kinds of gadget over a k-color palette:
//  - the copy gadget: K_{k+1} minus the edge uv, forcing f(u) = f(v);
//  - the encoder for s in 4..k: terminals A = {u, v, w, y_4..y_k}. With the
//    apex terminals colored y_i -> i, it writes the color of u into the pair
//    (v, w) of {1,2,3}-colors: equal pair copying f(u) when f(u) <= 3, an
//    unequal pair when f(u) = s, any equal pair for the remaining high colors.
// The encoder is the union of three kinds of piece glued on A: F1, one Fs,
// and one Fr for every r in 4..k other than s.

struct CopyTerminals {
  Vertex u{"u"};
  Vertex v{"v"};
};

struct EncoderTerminals {
  Vertex u{"u"};
  Vertex v{"v"};
  Vertex w{"w"};
  std::vector<Vertex> y;  // y[i] carries the index i + 4

  /// u, v, w and y4..yk, with the y's in role Y.
  static EncoderTerminals defaults(int k);
  std::vector<std::string> ids() const;
};

struct GadgetInstance {
  Graph graph;
  int k = 0;
  std::optional<int> s;
  std::map<std::string, std::string> terminals;  // "u", "v", "w", "y4".. -> vertex id

  const std::string& terminal(const std::string& name) const;
};

GadgetInstance f_copy(int k, const CopyTerminals& terminals = {}, const std::string& ns = "copy");
Graph f_copy_plus(int k);

GadgetInstance piece_f1(int k, const EncoderTerminals& terminals, const std::string& ns = "enc");
GadgetInstance piece_fs(int k, int s, const EncoderTerminals& terminals, const std::string& ns = "enc");
GadgetInstance piece_fr(int k, int s, int r, const EncoderTerminals& terminals, const std::string& ns = "enc");

GadgetInstance f_enc(int k, int s, const EncoderTerminals& terminals, const std::string& ns = "enc");
GadgetInstance f_enc(int k, int s);
/// f_enc plus every edge of the clique on A.
Graph f_enc_plus(int k, int s);
Graph f_enc_plus(const GadgetInstance& encoder);

// Predicates for the intended behavior, evaluated directly from the stated
// conditions with no graph search.

/// Throws MissingTerminal.
bool copy_spec(int k, const PartialColoring& f, const CopyTerminals& terminals = {});
/// `f` must color every terminal and be rainbow on the y's (NotRainbow).
bool enc_spec(int k, int s, const PartialColoring& f, const EncoderTerminals& terminals);
bool enc_spec(int k, int s, Color fu, Color fv, Color fw);

bool piece_f1_spec(int k, Color fu, Color fv, Color fw);
bool piece_fs_spec(int k, int s, Color fu, Color fv, Color fw);
bool piece_fr_spec(int k, int r, Color fu, Color fv, Color fw);

/// The rainbow assignment u, v, w -> fu, fv, fw and y_i -> i.
PartialColoring rainbow_assignment(int k, const EncoderTerminals& terminals, Color fu, Color fv, Color fw);

}  // namespace gadgetry

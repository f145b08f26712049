/**
 * Verbatim JSON recorded from the live analysis service (demo fixtures,
 * default config unless stated). Tests feed these through a fake client so
 * every asserted sentence/network is exactly what the service produces.
 */

import type { AnalyzeResponse, SymbolInfo } from "../src/types.js";

export const SYMBOLS: SymbolInfo[] = [
  { id: "i", gloss: "I", taxeme: "persons", domain: "people", predicative: false, icon: null },
  { id: "daddy", gloss: "daddy", taxeme: "persons", domain: "people", predicative: false, icon: null },
  { id: "cat", gloss: "cat", taxeme: "animals", domain: "fauna", predicative: false, icon: null },
  { id: "animal", gloss: "animal", taxeme: "animals", domain: "fauna", predicative: false, icon: null },
  { id: "meat", gloss: "meat", taxeme: "meals", domain: "food", predicative: false, icon: null },
  { id: "fish", gloss: "fish", taxeme: "meals", domain: "food", predicative: false, icon: null },
  { id: "cake", gloss: "cake", taxeme: "meals", domain: "food", predicative: false, icon: null },
  { id: "water", gloss: "water", taxeme: "beverages", domain: "food", predicative: false, icon: null },
  { id: "juice", gloss: "juice", taxeme: "beverages", domain: "food", predicative: false, icon: null },
  { id: "fork", gloss: "fork", taxeme: "household", domain: "things", predicative: false, icon: null },
  { id: "table", gloss: "table", taxeme: "household", domain: "things", predicative: false, icon: null },
  { id: "flower", gloss: "flower", taxeme: "plants", domain: "things", predicative: false, icon: null },
  { id: "tree", gloss: "tree", taxeme: "plants", domain: "things", predicative: false, icon: null },
  { id: "ball", gloss: "ball", taxeme: "toys", domain: "things", predicative: false, icon: null },
  { id: "doll", gloss: "doll", taxeme: "toys", domain: "things", predicative: false, icon: null },
  { id: "eat", gloss: "eat", taxeme: "acts_ingestion", domain: "acts", predicative: true, icon: null },
  { id: "drink", gloss: "drink", taxeme: "acts_ingestion", domain: "acts", predicative: true, icon: null },
  { id: "give", gloss: "give", taxeme: "acts_transfer", domain: "acts", predicative: true, icon: null },
  { id: "put", gloss: "put", taxeme: "acts_transfer", domain: "acts", predicative: true, icon: null },
  { id: "want", gloss: "want", taxeme: "acts_volition", domain: "acts", predicative: true, icon: null },
  { id: "like", gloss: "like", taxeme: "acts_volition", domain: "acts", predicative: true, icon: null },
  { id: "sleep", gloss: "sleep", taxeme: "acts_activity", domain: "acts", predicative: true, icon: null },
  { id: "play", gloss: "play", taxeme: "acts_activity", domain: "acts", predicative: true, icon: null },
];

/** POST /analyze {"sequence": ["i", "eat", "meat"]} */
export const I_EAT_MEAT: AnalyzeResponse = {
  network: {
    vertices: [
      { pos: 0, symbol: "i" },
      { pos: 1, symbol: "eat" },
      { pos: 2, symbol: "meat" },
    ],
    arcs: [
      { head: 1, case: "agent", dep: 0, value: 0.8 },
      { head: 1, case: "patient", dep: 2, value: 0.8 },
    ],
  },
  sentence: "Je mange la viande",
  rejected_candidates: [
    { head: 1, case: "agent", filler: 2, value: -0.8 },
    { head: 1, case: "patient", filler: 0, value: 0.0 },
    { head: 1, case: "instrument", filler: 0, value: 0.0 },
    { head: 1, case: "instrument", filler: 2, value: 0.0 },
  ],
  unattached: [],
};

/** POST /analyze {"sequence": ["meat", "i", "eat"]} */
export const MEAT_I_EAT: AnalyzeResponse = {
  network: {
    vertices: [
      { pos: 0, symbol: "meat" },
      { pos: 1, symbol: "i" },
      { pos: 2, symbol: "eat" },
    ],
    arcs: [
      { head: 2, case: "agent", dep: 1, value: 0.8 },
      { head: 2, case: "patient", dep: 0, value: 0.6400000000000001 },
    ],
  },
  sentence: "Je mange la viande",
  rejected_candidates: [
    { head: 2, case: "agent", filler: 0, value: -0.6400000000000001 },
    { head: 2, case: "patient", filler: 1, value: 0.0 },
    { head: 2, case: "instrument", filler: 0, value: 0.0 },
    { head: 2, case: "instrument", filler: 1, value: 0.0 },
  ],
  unattached: [],
};

/** POST /analyze {"sequence": ["i", "eat", "meat"], "threshold": 1.0} */
export const I_EAT_MEAT_MAX_THRESHOLD: AnalyzeResponse = {
  network: {
    vertices: [
      { pos: 0, symbol: "i" },
      { pos: 1, symbol: "eat" },
      { pos: 2, symbol: "meat" },
    ],
    arcs: [],
  },
  sentence: null,
  rejected_candidates: [
    { head: 1, case: "agent", filler: 0, value: 0.8 },
    { head: 1, case: "agent", filler: 2, value: -0.8 },
    { head: 1, case: "patient", filler: 0, value: 0.0 },
    { head: 1, case: "patient", filler: 2, value: 0.8 },
    { head: 1, case: "instrument", filler: 0, value: 0.0 },
    { head: 1, case: "instrument", filler: 2, value: 0.0 },
  ],
  unattached: [0, 1, 2],
};

/** POST /analyze {"sequence": ["i", "eat"]} */
export const I_EAT: AnalyzeResponse = {
  network: {
    vertices: [
      { pos: 0, symbol: "i" },
      { pos: 1, symbol: "eat" },
    ],
    arcs: [{ head: 1, case: "agent", dep: 0, value: 0.8 }],
  },
  sentence: "Je mange",
  rejected_candidates: [
    { head: 1, case: "patient", filler: 0, value: 0.0 },
    { head: 1, case: "instrument", filler: 0, value: 0.0 },
  ],
  unattached: [],
};

/** POST /analyze {"sequence": ["meat"]} */
export const MEAT_ONLY: AnalyzeResponse = {
  network: {
    vertices: [{ pos: 0, symbol: "meat" }],
    arcs: [],
  },
  sentence: "La viande",
  rejected_candidates: [],
  unattached: [0],
};

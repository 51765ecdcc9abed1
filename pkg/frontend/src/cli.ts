/**
 * Figure renderer CLI.
 *
 *   node dist/cli.js --figure fig2b --in out/ --out figures/fig2b.svg
 */

import { FIGURE_IDS, FigureId, renderFigureToFile } from "./figures.js";

function usage(): string {
  return (
    "usage: cli --figure ID --in DIR --out PATH\n" +
    `  ID: one of ${FIGURE_IDS.join(", ")}\n` +
    "  DIR: directory holding the engine's CSV outputs\n" +
    "  PATH: SVG file to write"
  );
}

export function main(argv: string[]): number {
  const args: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const val = argv[i + 1];
    if (!key.startsWith("--") || val === undefined) {
      process.stderr.write(usage() + "\n");
      return 2;
    }
    args[key.slice(2)] = val;
  }
  const figure = args["figure"];
  const inDir = args["in"];
  const outPath = args["out"];
  if (!figure || !inDir || !outPath) {
    process.stderr.write(usage() + "\n");
    return 2;
  }
  if (!(FIGURE_IDS as string[]).includes(figure)) {
    process.stderr.write(`unknown figure "${figure}" (know: ${FIGURE_IDS.join(", ")})\n`);
    return 2;
  }
  try {
    renderFigureToFile(figure as FigureId, inDir, outPath);
  } catch (err) {
    process.stderr.write(`error: ${err instanceof Error ? err.message : String(err)}\n`);
    return 1;
  }
  process.stdout.write(`${figure} -> ${outPath}\n`);
  return 0;
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}

import init, { generate_graph, certify, classify_pair } from "./pkg/deflab_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
const W = 800, H = 600;

// Spring layout from a circle start, so the same graph always lands the same way.
function layout(n, edges) {
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1);
    return [W / 2 + 0.35 * W * Math.cos(a), H / 2 + 0.35 * H * Math.sin(a)];
  });
  const k = Math.sqrt((W * H) / Math.max(n, 1)) * 0.6;
  let temp = W / 10;
  for (let iter = 0; iter < 300; iter++) {
    const disp = pos.map(() => [0, 0]);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i][0] - pos[j][0], dy = pos[i][1] - pos[j][1];
        const d = Math.max(Math.hypot(dx, dy), 0.01);
        const f = (k * k) / d;
        disp[i][0] += (dx / d) * f; disp[i][1] += (dy / d) * f;
        disp[j][0] -= (dx / d) * f; disp[j][1] -= (dy / d) * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u][0] - pos[v][0], dy = pos[u][1] - pos[v][1];
      const d = Math.max(Math.hypot(dx, dy), 0.01);
      const f = (d * d) / k;
      disp[u][0] -= (dx / d) * f; disp[u][1] -= (dy / d) * f;
      disp[v][0] += (dx / d) * f; disp[v][1] += (dy / d) * f;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.max(Math.hypot(...disp[i]), 0.01);
      const step = Math.min(d, temp);
      pos[i][0] = Math.min(W - 20, Math.max(20, pos[i][0] + (disp[i][0] / d) * step));
      pos[i][1] = Math.min(H - 20, Math.max(20, pos[i][1] + (disp[i][1] / d) * step));
    }
    temp *= 0.985;
  }
  return pos;
}

function draw({ order, edges, matching = [], missed = [], landmarks = {} }) {
  const svg = $("view");
  svg.replaceChildren();
  const pos = layout(order, edges);
  const key = (u, v) => (u < v ? `${u},${v}` : `${v},${u}`);
  const matched = new Set(matching.map(([u, v]) => key(u, v)));
  const lost = new Set(missed);
  const named = new Map();
  for (const [name, v] of Object.entries(landmarks)) named.set(v, name);
  for (const [u, v] of edges) {
    const l = document.createElementNS(SVG, "line");
    l.setAttribute("x1", pos[u][0]); l.setAttribute("y1", pos[u][1]);
    l.setAttribute("x2", pos[v][0]); l.setAttribute("y2", pos[v][1]);
    l.setAttribute("class", matched.has(key(u, v)) ? "edge matched" : "edge");
    svg.append(l);
  }
  const r = order > 80 ? 5 : 9;
  for (let v = 0; v < order; v++) {
    const c = document.createElementNS(SVG, "circle");
    c.setAttribute("cx", pos[v][0]); c.setAttribute("cy", pos[v][1]); c.setAttribute("r", r);
    c.setAttribute("class", [lost.has(v) ? "missed" : "", named.has(v) ? "landmark" : ""].join(" "));
    const tip = document.createElementNS(SVG, "title");
    tip.textContent = named.has(v) ? `${v} ${named.get(v)}` : `${v}`;
    c.append(tip);
    svg.append(c);
    if (order <= 80) {
      const t = document.createElementNS(SVG, "text");
      t.setAttribute("x", pos[v][0] - 3 * String(v).length); t.setAttribute("y", pos[v][1] + 3);
      t.textContent = v;
      svg.append(t);
    }
  }
}

function show(lines) {
  const out = $("out");
  out.replaceChildren();
  for (const [text, cls] of lines) {
    const div = document.createElement("div");
    div.textContent = text;
    if (cls) div.className = cls;
    out.append(div);
  }
}

function attempt(f) {
  try { f(); } catch (e) { show([[String(e), "fail"]]); }
}

function onGenerate() {
  attempt(() => {
    const g = JSON.parse(generate_graph($("gen-input").value));
    const missed = [];
    const covered = new Set(g.matching.flat());
    for (let v = 0; v < g.order; v++) if (!covered.has(v)) missed.push(v);
    draw({ ...g, missed });
    show([
      [`${g.order} vertices, ${g.edges.length} edges, graph6 ${g.graph6}`],
      [`deficiency ${g.deficiency}` + (g.predicted === null ? "" : `, formula says ${g.predicted}`),
        g.predicted === null || g.predicted === g.deficiency ? "pass" : "fail"],
      [`unmatched: ${missed.join(" ") || "none"}`],
    ]);
  });
}

function onCertify() {
  attempt(() => {
    const mode = document.querySelector("input[name=mode]:checked").value;
    const r = JSON.parse(certify($("cert-input").value, Number($("cert-n").value), mode));
    draw(r);
    const lines = [
      [`${r.procedure}: missed ${r.missed.length} (optimum ${r.deficiency}), bound ${r.claimed_bound}`],
      [r.precondition_ok ? "forbidden subgraphs absent" : "precondition violated, ran anyway", r.precondition_ok ? "pass" : "fail"],
    ];
    for (const note of r.notes) lines.push([`note: ${note}`]);
    for (const a of r.assertions) {
      const w = a.witness.length ? `  witness ${a.witness.join(" ")}` : "";
      lines.push([`${a.pass ? "ok  " : "FAIL"} ${a.name}${w}`, a.pass ? "pass" : "fail"]);
    }
    show(lines);
  });
}

function onClassify() {
  attempt(() => {
    const v = JSON.parse(classify_pair($("pair-h1").value, $("pair-h2").value, Number($("pair-d").value)));
    show([[v.text, v.member ? "pass" : "fail"]]);
  });
}

await init();
$("gen-go").onclick = onGenerate;
$("cert-go").onclick = onCertify;
$("pair-go").onclick = onClassify;
onGenerate();

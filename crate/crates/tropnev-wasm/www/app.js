// Wire the three bindings to the page. Build the wasm package first:
//   wasm-pack build --target web --out-dir www/pkg
import init, { explore_function, sweep_characteristic, solve_equation } from "./pkg/tropnev_wasm.js";

function run(errorId, body) {
  const error = document.getElementById(errorId);
  error.textContent = "";
  try {
    body();
  } catch (e) {
    error.textContent = String(e);
  }
}

function num(id) {
  return parseFloat(document.getElementById(id).value);
}

await init();

document.getElementById("fn-go").addEventListener("click", () =>
  run("fn-error", () => {
    const out = JSON.parse(
      explore_function(document.getElementById("fn-spec").value, num("fn-lo"), num("fn-hi"))
    );
    document.getElementById("fn-plot").innerHTML = out.svg;
    const rows = out.events
      .map(
        (e) =>
          `<tr><td>${e.x.toFixed(6)}</td><td>${e.value.toFixed(6)}</td>` +
          `<td>${e.omega.toFixed(6)}</td><td>${e.tau.toFixed(6)}</td><td>${e.kind}</td></tr>`
      )
      .join("");
    document.getElementById("fn-events").innerHTML =
      `<table><tr><th>x</th><th>f(x)</th><th>&omega;</th><th>&tau;</th><th>kind</th></tr>${rows}</table>`;
  })
);

document.getElementById("sw-go").addEventListener("click", () =>
  run("sw-error", () => {
    const out = JSON.parse(
      sweep_characteristic(
        document.getElementById("sw-spec").value,
        num("sw-lo"),
        num("sw-hi"),
        Math.max(8, Math.round(num("sw-n"))),
        document.getElementById("sw-log").checked
      )
    );
    document.getElementById("sw-plot").innerHTML = out.svg;
    const hyper = out.hyper_order === null ? "n/a" : out.hyper_order.toFixed(3);
    document.getElementById("sw-growth").textContent =
      `order estimate ${out.order.toFixed(3)} (infinite: ${out.infinite_order}), ` +
      `hyper-order estimate ${hyper}`;
  })
);

document.getElementById("eq-go").addEventListener("click", () =>
  run("eq-error", () => {
    const out = JSON.parse(
      solve_equation(document.getElementById("eq-spec").value, num("eq-lo"), num("eq-hi"))
    );
    document.getElementById("eq-plot").innerHTML = out.svg;
    document.getElementById("eq-info").textContent =
      `order ${out.equation.order}, c = ${out.equation.c}, ` +
      `max residual ${out.max_residual.toExponential(3)}, ` +
      `${out.basis.length} basis term(s)`;
  })
);

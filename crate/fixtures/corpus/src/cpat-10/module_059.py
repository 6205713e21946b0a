
def step_479(cfg):
    v0_s479 = []
    for v1_s479 in range(len(v2_s479)):
        if v3_s479(v2_s479[v1_s479]):
            v0_s479 += [v2_s479[v1_s479]]
    return cfg

def step_710(cfg):
    v0_s710 = []
    for v1_s710 in range(len(v2_s710)):
        if v3_s710(v2_s710[v1_s710]):
            v0_s710 += [v2_s710[v1_s710]]
    return cfg

def step_30(cfg):
    v0_s30 = []
    for v1_s30 in range(len(v2_s30)):
        if v3_s30(v2_s30[v1_s30]):
            v0_s30 = v0_s30 + [v2_s30[v1_s30]]
    return cfg

def step_261(cfg):
    v0_s261 = []
    for v1_s261 in range(len(v2_s261)):
        if v3_s261(v2_s261[v1_s261]):
            v0_s261 = v0_s261 + [v2_s261[v1_s261]]
    return cfg

def step_492(cfg):
    v0_s492 = []
    for v1_s492 in range(len(v2_s492)):
        if v3_s492(v2_s492[v1_s492]):
            v0_s492 = v0_s492 + [v2_s492[v1_s492]]
    return cfg

def step_723(cfg):
    v0_s723 = []
    for v1_s723 in range(len(v2_s723)):
        if v3_s723(v2_s723[v1_s723]):
            v0_s723 = v0_s723 + [v2_s723[v1_s723]]
    return cfg

def step_43(cfg):
    v0_s43 = []
    for v1_s43 in range(len(v2_s43)):
        v3_s43 = v2_s43[v1_s43]
        if v4_s43(v3_s43):
            v0_s43.append(v3_s43)
    return cfg

def step_274(cfg):
    v0_s274 = []
    for v1_s274 in range(len(v2_s274)):
        v3_s274 = v2_s274[v1_s274]
        if v4_s274(v3_s274):
            v0_s274.append(v3_s274)
    return cfg

def step_505(cfg):
    v0_s505 = []
    for v1_s505 in range(len(v2_s505)):
        v3_s505 = v2_s505[v1_s505]
        if v4_s505(v3_s505):
            v0_s505.append(v3_s505)
    return cfg

def step_736(cfg):
    v0_s736 = []
    for v1_s736 in range(len(v2_s736)):
        v3_s736 = v2_s736[v1_s736]
        if v4_s736(v3_s736):
            v0_s736.append(v3_s736)
    return cfg

def step_56(cfg):
    v0_s56 = []
    for v1_s56 in range(len(v2_s56)):
        if v3_s56(v2_s56[v1_s56]):
            v0_s56 += [v2_s56[v1_s56]]
    return cfg

def step_287(cfg):
    v0_s287 = []
    for v1_s287 in range(len(v2_s287)):
        if v3_s287(v2_s287[v1_s287]):
            v0_s287 += [v2_s287[v1_s287]]
    return cfg

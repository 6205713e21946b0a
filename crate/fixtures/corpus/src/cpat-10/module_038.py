
def step_571(cfg):
    v0_s571 = []
    for v1_s571 in range(len(v2_s571)):
        v3_s571 = v2_s571[v1_s571]
        if v4_s571(v3_s571):
            v0_s571.append(v3_s571)
    return cfg

def step_802(cfg):
    v0_s802 = []
    for v1_s802 in range(len(v2_s802)):
        v3_s802 = v2_s802[v1_s802]
        if v4_s802(v3_s802):
            v0_s802.append(v3_s802)
    return cfg

def step_122(cfg):
    v0_s122 = []
    for v1_s122 in range(len(v2_s122)):
        if v3_s122(v2_s122[v1_s122]):
            v0_s122 += [v2_s122[v1_s122]]
    return cfg

def step_353(cfg):
    v0_s353 = []
    for v1_s353 in range(len(v2_s353)):
        if v3_s353(v2_s353[v1_s353]):
            v0_s353 += [v2_s353[v1_s353]]
    return cfg

def step_584(cfg):
    v0_s584 = []
    for v1_s584 in range(len(v2_s584)):
        if v3_s584(v2_s584[v1_s584]):
            v0_s584 += [v2_s584[v1_s584]]
    return cfg

def step_815(cfg):
    v0_s815 = []
    for v1_s815 in range(len(v2_s815)):
        if v3_s815(v2_s815[v1_s815]):
            v0_s815 += [v2_s815[v1_s815]]
    return cfg

def step_135(cfg):
    v0_s135 = []
    for v1_s135 in range(len(v2_s135)):
        if v3_s135(v2_s135[v1_s135]):
            v0_s135 = v0_s135 + [v2_s135[v1_s135]]
    return cfg

def step_366(cfg):
    v0_s366 = []
    for v1_s366 in range(len(v2_s366)):
        if v3_s366(v2_s366[v1_s366]):
            v0_s366 = v0_s366 + [v2_s366[v1_s366]]
    return cfg

def step_597(cfg):
    v0_s597 = []
    for v1_s597 in range(len(v2_s597)):
        if v3_s597(v2_s597[v1_s597]):
            v0_s597 = v0_s597 + [v2_s597[v1_s597]]
    return cfg

def step_828(cfg):
    v0_s828 = []
    for v1_s828 in range(len(v2_s828)):
        if v3_s828(v2_s828[v1_s828]):
            v0_s828 = v0_s828 + [v2_s828[v1_s828]]
    return cfg

def step_148(cfg):
    v0_s148 = []
    for v1_s148 in range(len(v2_s148)):
        v3_s148 = v2_s148[v1_s148]
        if v4_s148(v3_s148):
            v0_s148.append(v3_s148)
    return cfg

def step_379(cfg):
    v0_s379 = []
    for v1_s379 in range(len(v2_s379)):
        v3_s379 = v2_s379[v1_s379]
        if v4_s379(v3_s379):
            v0_s379.append(v3_s379)
    return cfg
